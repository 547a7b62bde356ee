#ifndef STABSET_PAIRING_HPP
#define STABSET_PAIRING_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace stabset::hilbert {

// Diagonal pairing (k,n) |-> k(k+1)/2 + (n-1)(2k+n-2)/2, a bijection from
// pairs of positive integers onto the positive integers. Indices on the
// antidiagonal k+n = s occupy (T(s-2), T(s-1)] where T(j) = j(j+1)/2, ordered
// by increasing k.
inline std::uint64_t alpha(std::uint64_t k, std::uint64_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("alpha arguments must be >= 1");
  return k * (k + 1) / 2 + (n - 1) * (2 * k + n - 2) / 2;
}

inline std::pair<std::uint64_t, std::uint64_t> alpha_inv(std::uint64_t index) {
  if (index < 1) throw std::invalid_argument("alpha_inv argument must be >= 1");
  // Find s with T(s-2) < index <= T(s-1).
  std::uint64_t j = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(index) + 1.0) - 1.0) / 2.0);
  while (j * (j + 1) / 2 < index) ++j;
  while (j >= 1 && (j - 1) * j / 2 >= index) --j;
  // Now T(j-1) < index <= T(j), so s = j + 1.
  std::uint64_t k = index - (j - 1) * j / 2;
  std::uint64_t n = (j + 1) - k;
  return {k, n};
}

}  // namespace stabset::hilbert

#endif
