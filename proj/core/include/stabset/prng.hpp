#ifndef STABSET_PRNG_HPP
#define STABSET_PRNG_HPP

#include <cstdint>
#include <random>

#include "stabset/rational.hpp"

namespace stabset {

// Deterministic RNG. Distribution helpers are written out explicitly because
// the std:: distribution classes are implementation-defined and seeded runs
// must be byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), rejection sampled.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

  // Small exact rational with |numerator| <= nmax, 1 <= denominator <= dmax.
  Rational small_rational(int nmax, int dmax) {
    long long num = range(-nmax, nmax);
    long long den = range(1, dmax);
    return Rational(num, den);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stabset

#endif
