#ifndef STABSET_FGRAPH_HPP
#define STABSET_FGRAPH_HPP

#include <optional>
#include <vector>

namespace stabset::fgraph {

// A self-map of {0, ..., size-1} given by its successor table.
struct FiniteSelfMap {
  int size = 0;
  std::vector<int> succ;

  static FiniteSelfMap create(std::vector<int> succ);

  int apply(int x) const { return succ[x]; }

  // The n-fold composition as a new table.
  FiniteSelfMap power(int n) const;
};

// The four sets, each a sorted list of points. Invariant: fix ⊆ orb ⊆ stab ⊆ atrac.
struct SetQuad {
  std::vector<int> fix;
  std::vector<int> orb;
  std::vector<int> stab;
  std::vector<int> atrac;

  bool inclusion_chain_holds() const;
};

// Sorted image of a sorted subset.
std::vector<int> image_of(const FiniteSelfMap& f, const std::vector<int>& subset);

// Points lying on a cycle, found by a three-color walk.
std::vector<int> cyclic_points(const FiniteSelfMap& f);

// Eventual image: iterate the set-image from the full carrier to a fixpoint.
std::vector<int> eventual_image(const FiniteSelfMap& f);

// Largest Y with f(Y) = Y, by peeling points that have no surviving preimage.
std::vector<int> greatest_stabilized_subset(const FiniteSelfMap& f);

// fix by scan, orb by cycle walk, atrac by image iteration, stab by peeling.
// The four computations are independent; equality of stab and atrac is a
// checked fact, not an assumption.
SetQuad four_sets(const FiniteSelfMap& f);

// Chain x0 = x, ..., x_depth with succ[x_{i+1}] = x_i, lexicographically
// smallest at each step among preimages that still admit a full-length
// completion. Returns nullopt when x has no backward chain of this length.
std::optional<std::vector<int>> backward_chain(const FiniteSelfMap& f, int x, int depth);

}  // namespace stabset::fgraph

#endif
