#include "stabset/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabset::staircase {

bool valid(Z2Point p) {
  long long cap = std::max(p.n - 1, 0LL);
  return p.m >= 0 && p.m <= cap;
}

void require_valid(Z2Point p) {
  if (!valid(p)) throw std::invalid_argument("point outside the staircase carrier");
}

Z2Point apply(Z2Point p) {
  require_valid(p);
  if (p.m > 0) return {p.n, p.m - 1};
  return {std::min(p.n - 1, 0LL), 0};
}

ClassifyReport classify(Z2Point p) {
  require_valid(p);
  ClassifyReport r;
  r.in_stab = false;
  if (p.m == 0 && p.n <= 0) {
    // Every maximal backward chain walks right along the ray to (0,0), jumps
    // to some (k,0) and climbs to (k,k-1): finite but of unbounded length.
    r.in_atrac = true;
    r.behavior = ChainBehavior::UnboundedFiniteChains;
  } else {
    // Inside column n the only preimage of (n,m) is (n,m+1), up to the top.
    r.in_atrac = false;
    r.behavior = ChainBehavior::BoundedChains;
    r.max_chain = (p.n - 1) - p.m;
  }
  return r;
}

std::vector<Z2Point> preimages(Z2Point p, long long ray_cap) {
  require_valid(p);
  std::vector<Z2Point> out;
  if (p.m > 0) {
    if (valid({p.n, p.m + 1})) out.push_back({p.n, p.m + 1});
    return out;
  }
  if (p.n == 0) {
    for (long long k = 1; k <= ray_cap; ++k) out.push_back({k, 0});
    return out;
  }
  if (p.n < 0) {
    out.push_back({p.n + 1, 0});
    return out;
  }
  // p = (n,0), n >= 1: only the column above, when it exists.
  if (valid({p.n, 1})) out.push_back({p.n, 1});
  return out;
}

std::optional<std::vector<Z2Point>> backward_search(Z2Point p, int depth) {
  require_valid(p);
  if (depth <= 0) throw std::invalid_argument("depth must be positive");
  std::vector<Z2Point> chain{p};
  Z2Point cur = p;
  for (int i = 1; i <= depth; ++i) {
    long long remaining = depth - i;
    std::vector<Z2Point> pre = preimages(cur, /*ray_cap=*/remaining + 1);
    if (pre.empty()) return std::nullopt;
    Z2Point chosen = pre.front();
    if (cur.n == 0 && cur.m == 0) {
      // Ray choice: from (k,0) the remaining chain is the forced climb of
      // length k-1, so k = remaining+1 is the smallest workable jump.
      chosen = {remaining + 1, 0};
    }
    chain.push_back(chosen);
    cur = chosen;
  }
  return chain;
}

int Truncation::label_of(Z2Point p) const {
  auto it = std::lower_bound(label_to_point.begin(), label_to_point.end(), p);
  if (it == label_to_point.end() || !(*it == p))
    throw std::invalid_argument("point outside truncation window");
  return static_cast<int>(it - label_to_point.begin());
}

Truncation truncate(int N) {
  if (N < 1) throw std::invalid_argument("window must be positive");
  std::vector<Z2Point> pts;
  for (long long n = -N; n <= N; ++n) {
    long long cap = std::max(n - 1, 0LL);
    for (long long m = 0; m <= cap; ++m) pts.push_back({n, m});
  }
  std::sort(pts.begin(), pts.end());
  Truncation t;
  t.label_to_point = pts;
  std::vector<int> succ(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Z2Point img = (pts[i] == Z2Point{-N, 0}) ? Z2Point{-N, 0} : apply(pts[i]);
    auto it = std::lower_bound(pts.begin(), pts.end(), img);
    succ[i] = static_cast<int>(it - pts.begin());
  }
  t.map = fgraph::FiniteSelfMap::create(std::move(succ));
  return t;
}

}  // namespace stabset::staircase
