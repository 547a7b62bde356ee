#ifndef STABSET_HILBERT_HPP
#define STABSET_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabset/pairing.hpp"
#include "stabset/rational.hpp"
#include "stabset/sparsevec.hpp"

namespace stabset::hilbert {

// All constructed vectors live on {0} ∪ {alpha(k,n) : k <= k_max, n <= n_max}.
struct TruncationWindow {
  std::uint64_t k_max = 0;
  std::uint64_t n_max = 0;

  bool contains(std::uint64_t index) const;
  void require_inside(const SparseVec& v) const;
};

// ---------------------------------------------------------------------------
// The weighted shift of the warm-up example: coefficient of e_k in the image
// is (input coefficient of e_{k+1}) / (k+1).

SparseVec t_example_apply(const SparseVec& v);

// Kernel of the displayed formula is spanned by e_0; the prose names e_1.
// Both conventions are recorded, the displayed one is the one verified.
struct TExampleKernelReport {
  std::uint64_t displayed_kernel_index = 0;
  std::uint64_t stated_kernel_index = 1;
  bool conventions_differ = true;
};
TExampleKernelReport t_example_kernel_report();

// Solving T(h) = v forces h_{i+1} = (i+1) * v_i; returns those coefficients
// for i < bound.
std::vector<Rational> t_example_forced_preimage(const SparseVec& v, std::uint64_t bound);

// ---------------------------------------------------------------------------
// The block operator. Defining clauses:
//   T(e_0) = 0
//   T(e_{alpha(k,1)})   = (1/k^2) e_0 - sum_{n>=1} e_{alpha(k,n)} / ((n+1)...(n+k+1))
//   T(e_{alpha(k,n+1)}) = e_{alpha(k,n)} / (n+1)
// The infinite sum in the middle clause is cut at n_max; the discarded tail's
// l2 norm is bounded and reported.

struct TailInfo {
  double tail_norm_bound = 0.0;
  std::vector<std::uint64_t> emitting_columns;  // k's whose alpha(k,1) entry fired
};

SparseVec t_hat_apply(const SparseVec& v, const TruncationWindow& w, TailInfo* tail = nullptr);

// Shift family: f_kj(k,j) has coefficient 1/((n+1)...(n+k-j+1)) at alpha(k,n)
// for n >= j, nothing elsewhere. f_vec(k) = f_kj(k,1). Valid for 1 <= j <= k.
SparseVec f_kj_vec(std::uint64_t k, std::uint64_t j, const TruncationWindow& w);
SparseVec f_vec(std::uint64_t k, const TruncationWindow& w);

// Kernel family: same tail as f_vec(k) but with unit coefficient at
// alpha(k,1). These are the vectors the kernel and e_0-preimage
// characterizations hold for; they differ from f_vec(k) in that one entry.
SparseVec kernel_generator(std::uint64_t k, const TruncationWindow& w);

// Comparison on internal indices: after `applications` operator steps the top
// `applications` n-levels of each column are truncation boundary, reported
// rather than checked.
struct InternalComparison {
  bool equal = true;
  std::uint64_t internal_n_max = 0;
  std::optional<std::uint64_t> first_mismatch;
  std::vector<std::uint64_t> boundary;  // boundary indices carrying a nonzero
};
InternalComparison compare_internal(const SparseVec& x, const SparseVec& y,
                                    const TruncationWindow& w, int applications);

struct ShiftCheck {
  std::uint64_t k = 0, j = 0;
  InternalComparison cmp;
  bool pass() const { return cmp.equal; }
};
// T(f_{k,j}) = f_{k,j-1} coordinatewise, 2 <= j <= k.
ShiftCheck verify_shift_relation(std::uint64_t k, std::uint64_t j, const TruncationWindow& w);

using Combination = std::vector<std::pair<std::uint64_t, Rational>>;  // (k, lambda_k)

struct WitnessCheck {
  SparseVec g;
  SparseVec image;
  Rational e0_coefficient;
  InternalComparison cmp;
  bool pass() const { return cmp.equal; }
};

// g = a0 e_0 + sum lambda_k * kernel_generator(k); verifies
// T(g) = (sum lambda_k / k^2) e_0 on internal indices.
WitnessCheck combination_witness(const Combination& coeffs, const Rational& a0,
                                 const TruncationWindow& w);
// Preconditions sum = 0 and sum = 1 respectively.
WitnessCheck kernel_witness(const Combination& coeffs, const Rational& a0,
                            const TruncationWindow& w);
WitnessCheck e0_witness(const Combination& coeffs, const Rational& a0, const TruncationWindow& w);

struct PreimageCheck {
  SparseVec h;
  SparseVec g;
  SparseVec image;  // T^{m-1}(h)
  int applications = 0;
  InternalComparison cmp;
  bool pass() const { return cmp.equal; }
};

// Explicit preimage of g = a0 e_0 + sum_{k>=m} lambda_k kernel_generator(k)
// under m-1 operator steps. Preconditions: m >= 2, sum lambda_k/k^2 = 1,
// lambda_m != 0, every k >= m.
PreimageCheck e0_preimage_depth(std::uint64_t m, const Combination& coeffs, const Rational& a0,
                                const TruncationWindow& w);

// Solving T(h) = f_{k,k} on column k forces, for a free leading value a1,
//   a_n = a1/((n+1)...(n+k))          for 2 <= n <= k
//   a_n = 1 + a1/((n+1)...(n+k))      for n >= k+1
// so the partial l2 norms grow without bound. Norms are float summaries.
struct DivergenceReport {
  std::uint64_t k = 0;
  Rational a1;
  std::vector<std::pair<std::uint64_t, double>> rung_norm_squared;
  bool monotone = true;
};
DivergenceReport nonsurjectivity_evidence(std::uint64_t k, const Rational& a1,
                                          const std::vector<std::uint64_t>& rungs);

// pi^2/6 + sqrt(6) pi / 3
double operator_norm_bound();

struct NormCheck {
  bool pass = true;
  double worst_ratio = 0.0;
  double bound = 0.0;
  int samples = 0;
};
// ||T v|| <= bound * ||v|| + tail allowance + slack for each sample.
NormCheck norm_bound_check(const std::vector<SparseVec>& samples, const TruncationWindow& w,
                           double slack = 1e-9);

}  // namespace stabset::hilbert

#endif
