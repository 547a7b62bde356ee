#include "stabset/fgraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace stabset::fgraph {

FiniteSelfMap FiniteSelfMap::create(std::vector<int> succ) {
  const int n = static_cast<int>(succ.size());
  if (n == 0) throw std::invalid_argument("empty carrier");
  for (int v : succ) {
    if (v < 0 || v >= n) throw std::invalid_argument("successor label out of range");
  }
  return FiniteSelfMap{n, std::move(succ)};
}

FiniteSelfMap FiniteSelfMap::power(int n) const {
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < size; ++i) cur[i] = succ[cur[i]];
  }
  return FiniteSelfMap{size, std::move(cur)};
}

bool SetQuad::inclusion_chain_holds() const {
  return std::includes(orb.begin(), orb.end(), fix.begin(), fix.end()) &&
         std::includes(stab.begin(), stab.end(), orb.begin(), orb.end()) &&
         std::includes(atrac.begin(), atrac.end(), stab.begin(), stab.end());
}

std::vector<int> image_of(const FiniteSelfMap& f, const std::vector<int>& subset) {
  std::vector<char> hit(f.size, 0);
  for (int x : subset) hit[f.succ[x]] = 1;
  std::vector<int> out;
  for (int i = 0; i < f.size; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

std::vector<int> cyclic_points(const FiniteSelfMap& f) {
  // 0 = unvisited, 1 = on current walk, 2 = finished.
  std::vector<char> color(f.size, 0);
  std::vector<int> step(f.size, -1);
  std::vector<char> cyclic(f.size, 0);
  std::vector<int> path;
  for (int start = 0; start < f.size; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    int x = start;
    while (color[x] == 0) {
      color[x] = 1;
      step[x] = static_cast<int>(path.size());
      path.push_back(x);
      x = f.succ[x];
    }
    if (color[x] == 1) {
      for (std::size_t i = step[x]; i < path.size(); ++i) cyclic[path[i]] = 1;
    }
    for (int p : path) color[p] = 2;
  }
  std::vector<int> out;
  for (int i = 0; i < f.size; ++i)
    if (cyclic[i]) out.push_back(i);
  return out;
}

std::vector<int> eventual_image(const FiniteSelfMap& f) {
  std::vector<int> cur(f.size);
  for (int i = 0; i < f.size; ++i) cur[i] = i;
  while (true) {
    std::vector<int> next = image_of(f, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<int> greatest_stabilized_subset(const FiniteSelfMap& f) {
  std::vector<int> pre_count(f.size, 0);
  for (int v : f.succ) ++pre_count[v];
  std::deque<int> queue;
  std::vector<char> removed(f.size, 0);
  for (int i = 0; i < f.size; ++i)
    if (pre_count[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (removed[x]) continue;
    removed[x] = 1;
    int y = f.succ[x];
    if (--pre_count[y] == 0 && !removed[y]) queue.push_back(y);
  }
  std::vector<int> out;
  for (int i = 0; i < f.size; ++i)
    if (!removed[i]) out.push_back(i);
  return out;
}

SetQuad four_sets(const FiniteSelfMap& f) {
  SetQuad q;
  for (int i = 0; i < f.size; ++i)
    if (f.succ[i] == i) q.fix.push_back(i);
  q.orb = cyclic_points(f);
  q.stab = greatest_stabilized_subset(f);
  q.atrac = eventual_image(f);
  return q;
}

std::optional<std::vector<int>> backward_chain(const FiniteSelfMap& f, int x, int depth) {
  if (x < 0 || x >= f.size) throw std::invalid_argument("point out of range");
  if (depth <= 0) throw std::invalid_argument("depth must be positive");

  // level[y] = largest k <= depth with y in the k-th image of the carrier,
  // i.e. the longest completion available below y.
  std::vector<int> level(f.size, 0);
  std::vector<int> cur(f.size);
  for (int i = 0; i < f.size; ++i) cur[i] = i;
  for (int k = 1; k <= depth; ++k) {
    std::vector<int> next = image_of(f, cur);
    if (next == cur) {
      for (int y : cur) level[y] = depth;
      break;
    }
    for (int y : next) level[y] = k;
    cur = std::move(next);
  }

  if (level[x] < depth) return std::nullopt;

  std::vector<std::vector<int>> preimages(f.size);
  for (int i = 0; i < f.size; ++i) preimages[f.succ[i]].push_back(i);

  std::vector<int> chain{x};
  int current = x;
  for (int i = 1; i <= depth; ++i) {
    int need = depth - i;
    int chosen = -1;
    for (int y : preimages[current]) {
      if (level[y] >= need) {
        chosen = y;
        break;
      }
    }
    if (chosen < 0) return std::nullopt;  // unreachable: level bookkeeping guarantees a choice
    chain.push_back(chosen);
    current = chosen;
  }
  return chain;
}

}  // namespace stabset::fgraph
