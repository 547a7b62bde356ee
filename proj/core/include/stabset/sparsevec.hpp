#ifndef STABSET_SPARSEVEC_HPP
#define STABSET_SPARSEVEC_HPP

#include <cstdint>
#include <map>

#include "stabset/rational.hpp"

namespace stabset::hilbert {

// Finitely supported coefficient vector over the basis (e_i). Zero entries are
// never stored.
class SparseVec {
 public:
  SparseVec() = default;

  static SparseVec basis(std::uint64_t i) {
    SparseVec v;
    v.coef_[i] = 1;
    return v;
  }

  const std::map<std::uint64_t, Rational>& entries() const { return coef_; }
  bool empty() const { return coef_.empty(); }

  Rational at(std::uint64_t i) const {
    auto it = coef_.find(i);
    return it == coef_.end() ? Rational(0) : it->second;
  }

  void set(std::uint64_t i, Rational v) {
    if (v == 0)
      coef_.erase(i);
    else
      coef_[i] = std::move(v);
  }

  void add(std::uint64_t i, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = coef_.try_emplace(i, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) coef_.erase(it);
    }
  }

  void add_scaled(const SparseVec& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [i, v] : other.coef_) add(i, v * scale);
  }

  Rational norm_squared() const {
    Rational s = 0;
    for (const auto& [i, v] : coef_) s += v * v;
    return s;
  }

  bool operator==(const SparseVec&) const = default;

 private:
  std::map<std::uint64_t, Rational> coef_;
};

}  // namespace stabset::hilbert

#endif
