#include "stabset/monoid_finite.hpp"

#include <deque>
#include <stdexcept>

namespace stabset::monoid {

MonoidSystem MonoidSystem::create(int size,
                                  std::vector<std::pair<std::string, std::vector<int>>> maps) {
  if (size <= 0) throw std::invalid_argument("carrier must be non-empty");
  if (maps.empty()) throw std::invalid_argument("family must be non-empty");
  for (const auto& [name, succ] : maps) {
    if (static_cast<int>(succ.size()) != size)
      throw std::invalid_argument("map " + name + " is not total on the carrier");
    for (int v : succ)
      if (v < 0 || v >= size) throw std::invalid_argument("map " + name + " leaves the carrier");
  }
  return MonoidSystem{size, std::move(maps)};
}

std::vector<int> family_image(const MonoidSystem& sys, const std::vector<int>& subset) {
  std::vector<char> hit(sys.size, 0);
  for (const auto& [name, succ] : sys.maps)
    for (int x : subset) hit[succ[x]] = 1;
  std::vector<int> out;
  for (int i = 0; i < sys.size; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

MonoidSets finite_monoid_sets(const MonoidSystem& sys) {
  MonoidSets out;

  std::vector<int> cur(sys.size);
  for (int i = 0; i < sys.size; ++i) cur[i] = i;
  while (true) {
    std::vector<int> next = family_image(sys, cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  out.atrac = cur;

  std::vector<int> support(sys.size, 0);  // incoming map-edges from surviving points
  for (const auto& [name, succ] : sys.maps)
    for (int x = 0; x < sys.size; ++x) ++support[succ[x]];
  std::vector<char> removed(sys.size, 0);
  std::deque<int> queue;
  for (int i = 0; i < sys.size; ++i)
    if (support[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (removed[x]) continue;
    removed[x] = 1;
    for (const auto& [name, succ] : sys.maps) {
      int y = succ[x];
      if (--support[y] == 0 && !removed[y]) queue.push_back(y);
    }
  }
  for (int i = 0; i < sys.size; ++i)
    if (!removed[i]) out.stab.push_back(i);

  out.equal = out.stab == out.atrac;
  return out;
}

}  // namespace stabset::monoid
