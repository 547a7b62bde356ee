#include "stabset/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabset::hilbert {

namespace {

// prod_{i=a}^{b} i, empty product for a > b.
Int range_product(std::uint64_t a, std::uint64_t b) {
  Int p = 1;
  for (std::uint64_t i = a; i <= b; ++i) p *= i;
  return p;
}

Int factorial(std::uint64_t n) { return range_product(2, n); }

}  // namespace

bool TruncationWindow::contains(std::uint64_t index) const {
  if (index == 0) return true;
  auto [k, n] = alpha_inv(index);
  return k <= k_max && n <= n_max;
}

void TruncationWindow::require_inside(const SparseVec& v) const {
  for (const auto& [i, c] : v.entries()) {
    if (!contains(i)) throw std::invalid_argument("support outside truncation window");
  }
}

SparseVec t_example_apply(const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v.entries()) {
    if (i == 0) continue;
    out.add(i - 1, c / Rational(i));
  }
  return out;
}

TExampleKernelReport t_example_kernel_report() { return {}; }

std::vector<Rational> t_example_forced_preimage(const SparseVec& v, std::uint64_t bound) {
  std::vector<Rational> forced;
  for (std::uint64_t i = 0; i < bound; ++i) forced.push_back(v.at(i) * Rational(i + 1));
  return forced;
}

SparseVec t_hat_apply(const SparseVec& v, const TruncationWindow& w, TailInfo* tail) {
  w.require_inside(v);
  SparseVec out;
  double tail_bound = 0.0;
  std::vector<std::uint64_t> emitting;
  for (const auto& [i, c] : v.entries()) {
    if (i == 0) continue;  // T(e_0) = 0
    auto [k, n] = alpha_inv(i);
    if (n >= 2) {
      out.add(alpha(k, n - 1), c / Rational(n));
      continue;
    }
    // alpha(k,1): (1/k^2) e_0 minus the column tail, cut at n_max.
    out.add(0, c / Rational(Int(k) * Int(k)));
    for (std::uint64_t t = 1; t <= w.n_max; ++t) {
      out.add(alpha(k, t), -c / Rational(range_product(t + 1, t + k + 1)));
    }
    emitting.push_back(k);
    // Discarded terms are below 1/(n+1)^2 each; sum of squares past n_max is
    // under 1/(3 (n_max+1)^3).
    tail_bound += rational_double(abs(c)) /
                  std::sqrt(3.0 * std::pow(static_cast<double>(w.n_max) + 1.0, 3.0));
  }
  if (tail) {
    tail->tail_norm_bound = tail_bound;
    tail->emitting_columns = std::move(emitting);
  }
  return out;
}

SparseVec f_kj_vec(std::uint64_t k, std::uint64_t j, const TruncationWindow& w) {
  if (j < 1 || j > k) throw std::invalid_argument("f_kj requires 1 <= j <= k");
  if (k > w.k_max) throw std::invalid_argument("column outside window");
  SparseVec v;
  for (std::uint64_t n = j; n <= w.n_max; ++n) {
    v.set(alpha(k, n), Rational(1) / Rational(range_product(n + 1, n + k - j + 1)));
  }
  return v;
}

SparseVec f_vec(std::uint64_t k, const TruncationWindow& w) { return f_kj_vec(k, 1, w); }

SparseVec kernel_generator(std::uint64_t k, const TruncationWindow& w) {
  SparseVec v = f_vec(k, w);
  v.set(alpha(k, 1), 1);
  return v;
}

InternalComparison compare_internal(const SparseVec& x, const SparseVec& y,
                                    const TruncationWindow& w, int applications) {
  if (static_cast<std::uint64_t>(applications) >= w.n_max)
    throw std::invalid_argument("window too small for this many operator steps");
  InternalComparison r;
  r.internal_n_max = w.n_max - static_cast<std::uint64_t>(applications);
  auto classify = [&](std::uint64_t i) {
    if (i == 0) return 0;  // internal
    auto [k, n] = alpha_inv(i);
    (void)k;
    return n <= r.internal_n_max ? 0 : 1;  // 1 = boundary
  };
  auto visit = [&](std::uint64_t i) {
    if (classify(i) == 1) {
      if (std::find(r.boundary.begin(), r.boundary.end(), i) == r.boundary.end())
        r.boundary.push_back(i);
      return;
    }
    if (x.at(i) != y.at(i) && r.equal) {
      r.equal = false;
      r.first_mismatch = i;
    }
  };
  for (const auto& [i, c] : x.entries()) visit(i);
  for (const auto& [i, c] : y.entries()) visit(i);
  std::sort(r.boundary.begin(), r.boundary.end());
  return r;
}

ShiftCheck verify_shift_relation(std::uint64_t k, std::uint64_t j, const TruncationWindow& w) {
  if (j < 2 || j > k) throw std::invalid_argument("shift relation requires 2 <= j <= k");
  SparseVec lhs = t_hat_apply(f_kj_vec(k, j, w), w);
  SparseVec rhs = f_kj_vec(k, j - 1, w);
  ShiftCheck c;
  c.k = k;
  c.j = j;
  c.cmp = compare_internal(lhs, rhs, w, 1);
  return c;
}

WitnessCheck combination_witness(const Combination& coeffs, const Rational& a0,
                                 const TruncationWindow& w) {
  WitnessCheck c;
  SparseVec g;
  g.add(0, a0);
  Rational sum = 0;
  for (const auto& [k, lambda] : coeffs) {
    if (k < 1 || k > w.k_max) throw std::invalid_argument("column outside window");
    g.add_scaled(kernel_generator(k, w), lambda);
    sum += lambda / Rational(Int(k) * Int(k));
  }
  c.g = g;
  c.e0_coefficient = sum;
  c.image = t_hat_apply(g, w);
  SparseVec expected;
  expected.add(0, sum);
  c.cmp = compare_internal(c.image, expected, w, 1);
  return c;
}

WitnessCheck kernel_witness(const Combination& coeffs, const Rational& a0,
                            const TruncationWindow& w) {
  Rational sum = 0;
  for (const auto& [k, lambda] : coeffs) sum += lambda / Rational(Int(k) * Int(k));
  if (sum != 0) throw std::invalid_argument("kernel witness requires sum lambda_k/k^2 = 0");
  return combination_witness(coeffs, a0, w);
}

WitnessCheck e0_witness(const Combination& coeffs, const Rational& a0, const TruncationWindow& w) {
  Rational sum = 0;
  for (const auto& [k, lambda] : coeffs) sum += lambda / Rational(Int(k) * Int(k));
  if (sum != 1) throw std::invalid_argument("e0 witness requires sum lambda_k/k^2 = 1");
  return combination_witness(coeffs, a0, w);
}

PreimageCheck e0_preimage_depth(std::uint64_t m, const Combination& coeffs, const Rational& a0,
                                const TruncationWindow& w) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  Rational sum = 0;
  bool lambda_m_nonzero = false;
  for (const auto& [k, lambda] : coeffs) {
    if (k < m) throw std::invalid_argument("coefficients must have k >= m");
    if (k == m && lambda != 0) lambda_m_nonzero = true;
    sum += lambda / Rational(Int(k) * Int(k));
  }
  if (sum != 1) throw std::invalid_argument("preimage requires sum lambda_k/k^2 = 1");
  if (!lambda_m_nonzero) throw std::invalid_argument("lambda_m must be nonzero");

  PreimageCheck c;
  c.applications = static_cast<int>(m) - 1;

  // Per column the preimage of kernel_generator(k) under m-1 steps is
  // f_{k,m} + (1 - 1/(k+1)!) m! e_{alpha(k,m)}; the e_0 part lifts through
  // column m-1 the same way, scaled by (m-1)^2.
  SparseVec h;
  if (a0 != 0) {
    Rational scale = a0 * Rational(Int(m - 1) * Int(m - 1));
    h.add_scaled(f_kj_vec(m - 1, m - 1, w), scale);
    Rational corr = (Rational(1) - Rational(1) / Rational(factorial(m))) * Rational(factorial(m - 1));
    h.add(alpha(m - 1, m - 1), scale * corr);
  }
  for (const auto& [k, lambda] : coeffs) {
    if (lambda == 0) continue;
    h.add_scaled(f_kj_vec(k, m, w), lambda);
    Rational corr = (Rational(1) - Rational(1) / Rational(factorial(k + 1))) * Rational(factorial(m));
    h.add(alpha(k, m), lambda * corr);
  }
  c.h = h;

  SparseVec g;
  g.add(0, a0);
  for (const auto& [k, lambda] : coeffs) g.add_scaled(kernel_generator(k, w), lambda);
  c.g = g;

  SparseVec img = h;
  for (int i = 0; i < c.applications; ++i) img = t_hat_apply(img, w);
  c.image = img;
  c.cmp = compare_internal(c.image, c.g, w, c.applications);
  return c;
}

DivergenceReport nonsurjectivity_evidence(std::uint64_t k, const Rational& a1,
                                          const std::vector<std::uint64_t>& rungs) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  DivergenceReport rep;
  rep.k = k;
  rep.a1 = a1;
  const double a1d = rational_double(a1);
  std::uint64_t top = 0;
  for (std::uint64_t r : rungs) top = std::max(top, r);
  double acc = a1d * a1d;  // n = 1 term
  std::vector<std::uint64_t> sorted = rungs;
  std::sort(sorted.begin(), sorted.end());
  std::size_t next = 0;
  double prev = -1.0;
  for (std::uint64_t n = 2; n <= top; ++n) {
    // product (n+1)...(n+k), incrementally in floating point
    double prod = 1.0;
    for (std::uint64_t i = n + 1; i <= n + k; ++i) prod *= static_cast<double>(i);
    double an = (n >= k + 1 ? 1.0 : 0.0) + a1d / prod;
    acc += an * an;
    while (next < sorted.size() && sorted[next] == n) {
      rep.rung_norm_squared.emplace_back(n, acc);
      if (prev >= 0 && acc <= prev) rep.monotone = false;
      prev = acc;
      ++next;
    }
  }
  return rep;
}

double operator_norm_bound() {
  return std::numbers::pi * std::numbers::pi / 6.0 +
         std::sqrt(6.0) * std::numbers::pi / 3.0;
}

NormCheck norm_bound_check(const std::vector<SparseVec>& samples, const TruncationWindow& w,
                           double slack) {
  NormCheck c;
  c.bound = operator_norm_bound();
  c.samples = static_cast<int>(samples.size());
  for (const SparseVec& v : samples) {
    TailInfo tail;
    SparseVec img = t_hat_apply(v, w, &tail);
    double nv = std::sqrt(rational_double(v.norm_squared()));
    double ni = std::sqrt(rational_double(img.norm_squared()));
    if (nv == 0.0) continue;
    double ratio = ni / nv;
    c.worst_ratio = std::max(c.worst_ratio, ratio);
    if (ni > c.bound * nv + tail.tail_norm_bound + slack) c.pass = false;
  }
  return c;
}

}  // namespace stabset::hilbert
