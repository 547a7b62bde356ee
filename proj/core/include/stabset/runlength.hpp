#ifndef STABSET_RUNLENGTH_HPP
#define STABSET_RUNLENGTH_HPP

#include <string>
#include <string_view>
#include <vector>

namespace stabset::monoid {

// Run-length decomposition of a prefix. The final run is cut off by the
// prefix end, so only a lower bound on its length is known.
struct RunLengthPair {
  std::string shape;            // run letters; never two equal neighbours
  std::vector<int> lengths;     // complete runs only
  int pending = 0;              // observed length of the final, incomplete run
};

RunLengthPair rle_decode(std::string_view v);

// Section of run-length encoding along a shape word: lengths (c1, c2, ...)
// map to shape[0]^c1 shape[1]^c2 ...
std::string psi_apply(std::string_view shape, const std::vector<int>& lengths);

// Self-reading fixed point of run-length encoding over {1,2} starting with 2.
std::string kolakoski(std::size_t len);

struct SmoothReport {
  bool pass = true;
  int achieved_depth = 0;
  int failed_depth = -1;
  std::size_t failed_position = 0;  // 1-based position of the offending run
};

// Iterates run-length encoding; every complete run length must stay inside
// the alphabet of digits.
SmoothReport smooth_check(std::string_view w, const std::string& sigma, int depth);

}  // namespace stabset::monoid

#endif
