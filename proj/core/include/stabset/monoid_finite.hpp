#ifndef STABSET_MONOID_FINITE_HPP
#define STABSET_MONOID_FINITE_HPP

#include <string>
#include <vector>

#include "stabset/fgraph.hpp"

namespace stabset::monoid {

// Finite carrier {0..size-1} with a named family of total self-maps.
struct MonoidSystem {
  int size = 0;
  std::vector<std::pair<std::string, std::vector<int>>> maps;

  static MonoidSystem create(int size,
                             std::vector<std::pair<std::string, std::vector<int>>> maps);
};

struct MonoidSets {
  std::vector<int> stab;
  std::vector<int> atrac;
  bool equal = false;
};

// atrac: iterate A <- union of map images from the full carrier.
// stab: greatest Y with union of images equal to Y, by peeling points with no
// surviving preimage under any map. Both exact; equality is reported, not
// assumed.
MonoidSets finite_monoid_sets(const MonoidSystem& sys);

// Union of images of a subset under every map of the family.
std::vector<int> family_image(const MonoidSystem& sys, const std::vector<int>& subset);

}  // namespace stabset::monoid

#endif
