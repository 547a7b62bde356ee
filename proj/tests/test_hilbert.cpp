#include <doctest.h>

#include <stdexcept>

#include "stabset/hilbert.hpp"
#include "stabset/prng.hpp"

using namespace stabset;
using namespace stabset::hilbert;

TEST_CASE("pairing table values") {
  CHECK(alpha(1, 1) == 1);
  CHECK(alpha(1, 2) == 2);
  CHECK(alpha(2, 1) == 3);
  CHECK(alpha(1, 3) == 4);
  CHECK(alpha(2, 2) == 5);
  CHECK(alpha(3, 1) == 6);
  CHECK(alpha(1, 4) == 7);
  CHECK(alpha(2, 3) == 8);
  CHECK(alpha(2, 4) == 12);
  CHECK(alpha(3, 3) == 13);
  CHECK(alpha(3, 4) == 18);
  CHECK_THROWS_AS(alpha(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(alpha_inv(0), std::invalid_argument);
}

TEST_CASE("pairing is a bijection on a full range") {
  for (std::uint64_t i = 1; i <= 20000; ++i) {
    auto [k, n] = alpha_inv(i);
    CHECK(alpha(k, n) == i);
  }
}

TEST_CASE("warm-up shift: e0 dies, e1 lands on e0") {
  CHECK(t_example_apply(SparseVec::basis(0)).empty());
  CHECK(t_example_apply(SparseVec::basis(1)) == SparseVec::basis(0));
  auto rep = t_example_kernel_report();
  CHECK(rep.displayed_kernel_index == 0);
  CHECK(rep.conventions_differ);
}

TEST_CASE("warm-up shift: the harmonic vector forces unit preimage coefficients") {
  SparseVec v;
  for (std::uint64_t k = 0; k <= 20; ++k) v.set(k, Rational(1, k + 1));
  auto forced = t_example_forced_preimage(v, 20);
  for (std::uint64_t i = 0; i < 20; ++i) CHECK(forced[i] == 1);
}

TEST_CASE("block operator on basis vectors") {
  TruncationWindow w{8, 8};
  CHECK(t_hat_apply(SparseVec::basis(0), w).empty());

  // alpha(1,2) = 2 maps to (1/2) e_{alpha(1,1)}.
  SparseVec img = t_hat_apply(SparseVec::basis(alpha(1, 2)), w);
  SparseVec expect;
  expect.set(alpha(1, 1), Rational(1, 2));
  CHECK(img == expect);

  // alpha(2,1) = 3 maps to (1/4) e_0 minus the column-2 tail.
  TailInfo tail;
  img = t_hat_apply(SparseVec::basis(alpha(2, 1)), w, &tail);
  CHECK(img.at(0) == Rational(1, 4));
  CHECK(img.at(alpha(2, 1)) == Rational(-1, 2 * 3 * 4));
  CHECK(img.at(alpha(2, 2)) == Rational(-1, 3 * 4 * 5));
  CHECK(tail.emitting_columns == std::vector<std::uint64_t>{2});
  CHECK(tail.tail_norm_bound > 0.0);
  CHECK_THROWS_AS(t_hat_apply(SparseVec::basis(alpha(9, 1)), w), std::invalid_argument);
}

TEST_CASE("shift family coefficients") {
  TruncationWindow w{8, 8};
  auto f11 = f_kj_vec(1, 1, w);
  for (std::uint64_t n = 1; n <= w.n_max; ++n) CHECK(f11.at(alpha(1, n)) == Rational(1, n + 1));
  auto f22 = f_kj_vec(2, 2, w);
  CHECK(f22.at(alpha(2, 1)) == 0);
  for (std::uint64_t n = 2; n <= w.n_max; ++n) CHECK(f22.at(alpha(2, n)) == Rational(1, n + 1));
  // f_{k,k}: single-factor tail starting at n = k.
  auto f33 = f_kj_vec(3, 3, w);
  CHECK(f33.at(alpha(3, 2)) == 0);
  CHECK(f33.at(alpha(3, 3)) == Rational(1, 4));
  CHECK(f_vec(2, w) == f_kj_vec(2, 1, w));
  CHECK_THROWS_AS(f_kj_vec(3, 4, w), std::invalid_argument);
  CHECK_THROWS_AS(verify_shift_relation(3, 1, w), std::invalid_argument);
}

TEST_CASE("kernel generator differs from the shift family in one coefficient") {
  TruncationWindow w{8, 8};
  auto gen = kernel_generator(2, w);
  auto f = f_vec(2, w);
  CHECK(gen.at(alpha(2, 1)) == 1);
  CHECK(f.at(alpha(2, 1)) == Rational(1, 6));
  for (std::uint64_t n = 2; n <= w.n_max; ++n) CHECK(gen.at(alpha(2, n)) == f.at(alpha(2, n)));
  // The normalized family is what the operator annihilates columnwise: its
  // image is (1/k^2) e_0 with no residue on internal indices.
  auto img = t_hat_apply(gen, w);
  SparseVec e0_part;
  e0_part.set(0, Rational(1, 4));
  CHECK(compare_internal(img, e0_part, w, 1).equal);
}

TEST_CASE("shift relations hold exactly on internal indices") {
  TruncationWindow w{16, 16};
  for (std::uint64_t k = 2; k <= w.k_max; ++k)
    for (std::uint64_t j = 2; j <= k; ++j) {
      auto chk = verify_shift_relation(k, j, w);
      CHECK(chk.pass());
      CHECK(chk.cmp.internal_n_max == w.n_max - 1);
    }
}

TEST_CASE("kernel and e0 witnesses") {
  TruncationWindow w{10, 10};
  // lambda_1 = 1, lambda_2 = -4: 1/1 - 4/4 = 0.
  auto chk = kernel_witness({{1, Rational(1)}, {2, Rational(-4)}}, Rational(0), w);
  CHECK(chk.pass());
  CHECK(chk.e0_coefficient == 0);

  // All lambdas zero, a0 = 1: g = e_0, image 0.
  auto e0 = kernel_witness({}, Rational(1), w);
  CHECK(e0.pass());
  CHECK(e0.image.empty());

  CHECK_THROWS_AS(kernel_witness({{1, Rational(1)}}, Rational(0), w), std::invalid_argument);

  // lambda_2 = 4: 4/4 = 1 maps exactly onto e_0.
  auto one = e0_witness({{2, Rational(4)}}, Rational(0), w);
  CHECK(one.pass());
  SparseVec target = SparseVec::basis(0);
  CHECK(compare_internal(one.image, target, w, 1).equal);
  CHECK_THROWS_AS(e0_witness({{1, Rational(3)}}, Rational(0), w), std::invalid_argument);
}

TEST_CASE("explicit preimages of depth m-1") {
  TruncationWindow w{12, 12};
  // m=2, lambda_2 = 4, a0 = 0.
  auto c2 = e0_preimage_depth(2, {{2, Rational(4)}}, Rational(0), w);
  CHECK(c2.pass());
  CHECK(c2.applications == 1);
  // m=3, lambda_3 = 9, a0 = 1.
  auto c3 = e0_preimage_depth(3, {{3, Rational(9)}}, Rational(1), w);
  CHECK(c3.pass());
  CHECK(c3.applications == 2);
  // Mixed support and rational weights: 8/16 + (25/2)/25 = 1.
  auto c4 = e0_preimage_depth(4, {{4, Rational(8)}, {5, Rational(25, 2)}}, Rational(-2, 3), w);
  CHECK(c4.pass());

  CHECK_THROWS_AS(e0_preimage_depth(2, {{2, Rational(0)}, {3, Rational(9)}}, Rational(0), w),
                  std::invalid_argument);
  CHECK_THROWS_AS(e0_preimage_depth(2, {{1, Rational(1)}}, Rational(0), w), std::invalid_argument);
}

TEST_CASE("forced preimage coefficients of f_{k,k} diverge") {
  auto rep = nonsurjectivity_evidence(2, Rational(0), {100, 1000, 10000});
  CHECK(rep.monotone);
  // With zero leading coefficient the forced tail is identically 1.
  CHECK(rep.rung_norm_squared.back().second == doctest::Approx(10000 - 2).epsilon(1e-9));
  auto cancel = nonsurjectivity_evidence(2, Rational(-(3 * 4 * 5)), {100, 1000, 10000});
  CHECK(cancel.monotone);
  CHECK(cancel.rung_norm_squared.back().second > 1000.0);
}

TEST_CASE("operator norm stays under the analytic bound") {
  TruncationWindow w{10, 10};
  std::vector<SparseVec> samples{SparseVec::basis(0)};
  for (std::uint64_t k = 1; k <= w.k_max; ++k)
    for (std::uint64_t n = 1; n <= w.n_max; ++n) samples.push_back(SparseVec::basis(alpha(k, n)));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    SparseVec v;
    for (int t = 0; t < 10; ++t)
      v.add(alpha(1 + rng.below(w.k_max), 1 + rng.below(w.n_max)), rng.small_rational(9, 5));
    samples.push_back(std::move(v));
  }
  auto chk = norm_bound_check(samples, w);
  CHECK(chk.pass);
  CHECK(chk.bound == doctest::Approx(4.2100337).epsilon(1e-6));
  // A single shifted basis vector comes back scaled by 1/(n+1) <= 1.
  auto img = t_hat_apply(SparseVec::basis(alpha(3, 4)), w);
  CHECK(img.norm_squared() == Rational(1, 16));
}
