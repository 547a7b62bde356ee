#ifndef STABSET_STAIRCASE_HPP
#define STABSET_STAIRCASE_HPP

#include <optional>
#include <vector>

#include "stabset/fgraph.hpp"

namespace stabset::staircase {

// Point of the staircase carrier {(n,m) : 0 <= m <= max(n-1, 0)}: a left ray
// of bottom cells plus, for n >= 2, a column of height n-1 above (n,0).
struct Z2Point {
  long long n = 0;
  long long m = 0;

  bool operator==(const Z2Point&) const = default;
  auto operator<=>(const Z2Point&) const = default;
};

bool valid(Z2Point p);
void require_valid(Z2Point p);

// phi(n,m) = (n, m-1) for m > 0, phi(n,0) = (min(n-1,0), 0).
Z2Point apply(Z2Point p);

enum class ChainBehavior { InfiniteChain, UnboundedFiniteChains, BoundedChains };

struct ClassifyReport {
  bool in_atrac = false;
  bool in_stab = false;
  ChainBehavior behavior = ChainBehavior::BoundedChains;
  long long max_chain = 0;  // meaningful for BoundedChains only
};

// Closed-form classification. Cross-checked against backward_search in tests.
ClassifyReport classify(Z2Point p);

// Exact preimages. The preimage of (0,0) is the infinite ray {(k,0) : k >= 1};
// it is enumerated up to ray_cap.
std::vector<Z2Point> preimages(Z2Point p, long long ray_cap);

// Depth-limited exact search over the preimage relation. Away from (0,0)
// preimages are unique (a forced climb up one column, or the walk along the
// left ray), so only the ray choice at (0,0) branches; a chain of remaining
// length r needs the ray point (r,0) and smaller k never helps.
std::optional<std::vector<Z2Point>> backward_search(Z2Point p, int depth);

struct Truncation {
  fgraph::FiniteSelfMap map;
  std::vector<Z2Point> label_to_point;  // index -> point, sorted by (n,m)
  int label_of(Z2Point p) const;
};

// Restriction to |n| <= N with the boundary self-loop phi(-N,0) := (-N,0).
Truncation truncate(int N);

}  // namespace stabset::staircase

#endif
