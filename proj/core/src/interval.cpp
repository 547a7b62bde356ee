#include "stabset/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabset::interval {

bool Iv::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

bool Iv::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

namespace {

bool mergeable(const Iv& a, const Iv& b) {  // a.lo <= b.lo
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

Iv intersect(const Iv& a, const Iv& b) {
  Iv r;
  if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
    if (a.lo == b.lo) r.lo_closed = a.lo_closed && b.lo_closed;
  } else {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
    if (a.lo == b.lo) r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
    if (a.hi == b.hi) r.hi_closed = a.hi_closed && b.hi_closed;
  } else {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
    if (a.hi == b.hi) r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

Iv affine_image(const Iv& d, const Rational& p, const Rational& q) {
  if (p == 0) return Iv{q, q, true, true};
  Iv r;
  if (p > 0) {
    r = Iv{p * d.lo + q, p * d.hi + q, d.lo_closed, d.hi_closed};
  } else {
    r = Iv{p * d.hi + q, p * d.lo + q, d.hi_closed, d.lo_closed};
  }
  return r;
}

}  // namespace

IntervalUnion IntervalUnion::of(std::vector<Iv> parts) {
  std::erase_if(parts, [](const Iv& p) { return p.empty(); });
  std::sort(parts.begin(), parts.end(), [](const Iv& a, const Iv& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  IntervalUnion u;
  for (Iv& p : parts) {
    if (!u.parts_.empty() && mergeable(u.parts_.back(), p)) {
      Iv& back = u.parts_.back();
      if (p.hi > back.hi) {
        back.hi = p.hi;
        back.hi_closed = p.hi_closed;
      } else if (p.hi == back.hi) {
        back.hi_closed = back.hi_closed || p.hi_closed;
      }
    } else {
      u.parts_.push_back(p);
    }
  }
  return u;
}

IntervalUnion IntervalUnion::point(const Rational& x) { return of({Iv{x, x, true, true}}); }

IntervalUnion IntervalUnion::whole() { return of({Iv{0, 1, true, true}}); }

bool IntervalUnion::contains(const Rational& x) const {
  for (const Iv& p : parts_)
    if (p.contains(x)) return true;
  return false;
}

PWLMap PWLMap::create(std::vector<Rational> breakpoints,
                      std::vector<std::pair<Rational, Rational>> pieces,
                      std::vector<bool> attach_left) {
  if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
    throw std::invalid_argument("piece count must match breakpoints");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw std::invalid_argument("breakpoints must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw std::invalid_argument("breakpoints must increase");
  if (attach_left.empty()) attach_left.assign(pieces.size() - 1, false);
  if (attach_left.size() != pieces.size() - 1)
    throw std::invalid_argument("one attachment flag per internal breakpoint");
  PWLMap f{std::move(breakpoints), std::move(pieces), std::move(attach_left)};
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const auto& [p, q] = f.pieces[i];
    for (const Rational& end : {f.breakpoints[i], f.breakpoints[i + 1]}) {
      Rational v = p * end + q;
      if (v < 0 || v > 1) throw std::invalid_argument("piece leaves [0,1]");
    }
  }
  return f;
}

Iv PWLMap::piece_domain(std::size_t i) const {
  Iv d;
  d.lo = breakpoints[i];
  d.hi = breakpoints[i + 1];
  d.lo_closed = (i == 0) ? true : !attach_left[i - 1];
  d.hi_closed = (i + 1 == pieces.size()) ? true : attach_left[i];
  return d;
}

Rational PWLMap::apply(const Rational& x) const {
  if (x < 0 || x > 1) throw std::invalid_argument("point outside [0,1]");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (piece_domain(i).contains(x)) return pieces[i].first * x + pieces[i].second;
  }
  throw std::logic_error("piece domains do not cover [0,1]");
}

IntervalUnion image(const PWLMap& f, const IntervalUnion& u) {
  std::vector<Iv> out;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    Iv dom = f.piece_domain(i);
    for (const Iv& part : u.parts()) {
      Iv cut = intersect(dom, part);
      if (cut.empty()) continue;
      out.push_back(affine_image(cut, f.pieces[i].first, f.pieces[i].second));
    }
  }
  return IntervalUnion::of(std::move(out));
}

IntervalUnion preimage(const PWLMap& f, const IntervalUnion& u) {
  std::vector<Iv> out;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    Iv dom = f.piece_domain(i);
    const auto& [p, q] = f.pieces[i];
    for (const Iv& part : u.parts()) {
      if (p == 0) {
        if (part.contains(q)) out.push_back(dom);
        continue;
      }
      // Affine inverse of the target interval, cut to the piece domain.
      Iv pulled;
      if (p > 0) {
        pulled = Iv{(part.lo - q) / p, (part.hi - q) / p, part.lo_closed, part.hi_closed};
      } else {
        pulled = Iv{(part.hi - q) / p, (part.lo - q) / p, part.hi_closed, part.lo_closed};
      }
      Iv cut = intersect(dom, pulled);
      if (!cut.empty()) out.push_back(cut);
    }
  }
  return IntervalUnion::of(std::move(out));
}

bool subset_of(const IntervalUnion& a, const IntervalUnion& b) {
  for (const Iv& p : a.parts()) {
    bool covered = false;
    for (const Iv& q : b.parts()) {
      bool lo_ok = q.lo < p.lo || (q.lo == p.lo && (q.lo_closed || !p.lo_closed));
      bool hi_ok = q.hi > p.hi || (q.hi == p.hi && (q.hi_closed || !p.hi_closed));
      if (lo_ok && hi_ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<IntervalUnion> atrac_iterates(const PWLMap& f, int n) {
  if (n < 1) throw std::invalid_argument("iteration count must be positive");
  std::vector<IntervalUnion> out;
  IntervalUnion cur = IntervalUnion::whole();
  for (int i = 0; i < n; ++i) {
    cur = image(f, cur);
    out.push_back(cur);
  }
  return out;
}

IntervalUnion fixed_points(const PWLMap& f) {
  std::vector<Iv> out;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    Iv dom = f.piece_domain(i);
    const auto& [p, q] = f.pieces[i];
    if (p == 1) {
      if (q == 0) out.push_back(dom);
      continue;
    }
    Rational x = q / (Rational(1) - p);
    if (dom.contains(x)) out.push_back(Iv{x, x, true, true});
  }
  return IntervalUnion::of(std::move(out));
}

namespace {

Rational pick_point(const IntervalUnion& u) {
  const Iv& p = u.parts().front();
  if (p.lo_closed) return p.lo;
  if (p.hi_closed) return p.hi;
  return (p.lo + p.hi) / 2;
}

}  // namespace

std::optional<std::vector<Rational>> backward_chain_point(const PWLMap& f, const Rational& x,
                                                          int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  if (x < 0 || x > 1) throw std::invalid_argument("point outside [0,1]");
  IntervalUnion level = IntervalUnion::point(x);
  for (int i = 0; i < depth; ++i) {
    level = preimage(f, level);
    if (level.empty()) return std::nullopt;
  }
  std::vector<Rational> chain(depth + 1);
  chain[depth] = pick_point(level);
  for (int i = depth; i-- > 0;) chain[i] = f.apply(chain[i + 1]);
  if (chain[0] != x) throw std::logic_error("backward chain failed forward verification");
  return chain;
}

std::vector<Rational> forward_orbit(const PWLMap& f, const Rational& x, int steps) {
  std::vector<Rational> orbit{x};
  Rational cur = x;
  for (int i = 0; i < steps; ++i) {
    cur = f.apply(cur);
    orbit.push_back(cur);
    if (cur == orbit[orbit.size() - 2]) break;  // reached a fixed point
  }
  return orbit;
}

namespace examples {

PWLMap plateau_ramp() {
  return PWLMap::create({Rational(0), Rational(1, 2), Rational(1)},
                        {{Rational(0), Rational(1, 2)}, {Rational(3, 2), Rational(-3, 4)}},
                        {true});
}

PWLMap plateau_wrap() {
  return PWLMap::create(
      {Rational(0), Rational(1, 2), Rational(5, 8), Rational(1)},
      {{Rational(0), Rational(1, 2)}, {Rational(2), Rational(-1, 4)}, {Rational(2), Rational(-5, 4)}},
      {true, true});
}

}  // namespace examples

}  // namespace stabset::interval
