#ifndef STABSET_INTERVAL_HPP
#define STABSET_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "stabset/rational.hpp"

namespace stabset::interval {

// Rational interval inside [0,1] with open/closed ends; lo == hi only when
// both ends are closed (a point).
struct Iv {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const;
  bool empty() const;
  bool operator==(const Iv&) const = default;
};

// Disjoint, sorted, maximally merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  static IntervalUnion of(std::vector<Iv> parts);  // normalizes
  static IntervalUnion point(const Rational& x);
  static IntervalUnion whole();

  const std::vector<Iv>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;
  bool operator==(const IntervalUnion&) const = default;

 private:
  std::vector<Iv> parts_;
};

// Piecewise affine self-map of [0,1]. Piece i acts on the span between
// breakpoints i and i+1; attach_left[i] says whether internal breakpoint i+1
// belongs to piece i (default: it belongs to piece i+1, so pieces are
// [b_i, b_{i+1}) with the last one closed).
struct PWLMap {
  std::vector<Rational> breakpoints;                  // 0 = b_0 < ... < b_r = 1
  std::vector<std::pair<Rational, Rational>> pieces;  // x -> p x + q
  std::vector<bool> attach_left;                      // size r-1

  static PWLMap create(std::vector<Rational> breakpoints,
                       std::vector<std::pair<Rational, Rational>> pieces,
                       std::vector<bool> attach_left = {});

  Iv piece_domain(std::size_t i) const;
  Rational apply(const Rational& x) const;
};

IntervalUnion image(const PWLMap& f, const IntervalUnion& u);
IntervalUnion preimage(const PWLMap& f, const IntervalUnion& u);

// Every point of a lies in b. Both normalized, so each connected part of a
// must sit inside a single part of b.
bool subset_of(const IntervalUnion& a, const IntervalUnion& b);

// The decreasing chain f([0,1]) ⊇ f^2([0,1]) ⊇ ... ⊇ f^n([0,1]).
std::vector<IntervalUnion> atrac_iterates(const PWLMap& f, int n);

// Solutions of f(x) = x, exact; whole fixed intervals come back as intervals.
IntervalUnion fixed_points(const PWLMap& f);

// Chain x_0 = x, f(x_{i+1}) = x_i of the exact length, through preimage-set
// iteration (complete), with the witness read back by forward application.
std::optional<std::vector<Rational>> backward_chain_point(const PWLMap& f, const Rational& x,
                                                          int depth);

// Forward orbit; stops early when a value repeats.
std::vector<Rational> forward_orbit(const PWLMap& f, const Rational& x, int steps);

namespace examples {
// Constant 1/2 on [0,1/2], then x -> (3/2)(x - 1/2) on (1/2,1].
PWLMap plateau_ramp();
// Constant 1/2 on [0,1/2], then a two-piece expanding wrap of (1/2,1] onto
// (0,1] with no fixed point outside the plateau: 2x - 1/4 on (1/2,5/8],
// 2x - 5/4 on (5/8,1].
PWLMap plateau_wrap();
}  // namespace examples

}  // namespace stabset::interval

#endif
