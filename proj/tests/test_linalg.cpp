#include <doctest.h>

#include <stdexcept>

#include "stabset/fgraph.hpp"
#include "stabset/linalg.hpp"
#include "stabset/prng.hpp"
#include "stabset/random_instances.hpp"
#include "stabset/staircase.hpp"

using namespace stabset;
using linalg::RationalMatrix;

namespace {

RationalMatrix from_ints(int n, std::vector<std::vector<int>> rows) {
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("kernel bases") {
  CHECK(linalg::kernel_basis(RationalMatrix::identity(3)).dim() == 0);
  CHECK(linalg::kernel_basis(RationalMatrix(2, 2)).dim() == 2);
  auto m = from_ints(2, {{0, 1}, {0, 0}});
  auto k = linalg::kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.vecs[0] == std::vector<Rational>{1, 0});
}

TEST_CASE("chain report on a nilpotent Jordan block") {
  auto m = from_ints(3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto rep = linalg::chain_report(m);
  CHECK(rep.ker_dims == std::vector<int>{0, 1, 2, 3});
  CHECK(rep.stab_index == 3);
  CHECK(linalg::stable_subspace(m).dim() == 0);
  CHECK(linalg::decomposition_check(m));
}

TEST_CASE("chain report on the identity") {
  auto rep = linalg::chain_report(RationalMatrix::identity(2));
  CHECK(rep.ker_dims == std::vector<int>{0, 0, 0});
  CHECK(rep.stab_index == 0);
  CHECK(linalg::stable_subspace(RationalMatrix::identity(2)).dim() == 2);
}

TEST_CASE("block of a nilpotent part and an invertible part") {
  auto m = from_ints(3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  auto rep = linalg::chain_report(m);
  CHECK(rep.ker_dims == std::vector<int>{0, 1, 2, 2});
  CHECK(rep.stab_index == 2);
  auto im2 = linalg::image_basis(linalg::mat_pow(m, 2));
  REQUIRE(im2.dim() == 1);
  CHECK(im2.vecs[0] == std::vector<Rational>{0, 0, 1});
  CHECK(linalg::stable_subspace(m) == im2);
  CHECK(linalg::decomposition_check(m));
}

TEST_CASE("stable subspace of blockdiag(J2, [2])") {
  auto m = from_ints(3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 2}});
  auto s = linalg::stable_subspace(m);
  REQUIRE(s.dim() == 1);
  CHECK(s.vecs[0] == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("random matrices: stable subspace, decomposition, chain shape") {
  Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    auto m = gen::random_matrix(rng, 6);
    auto rep = linalg::chain_report(m);
    CHECK(rep.stab_index <= m.rows);
    CHECK(linalg::stable_subspace(m) == linalg::image_basis(linalg::mat_pow(m, m.rows)));
    CHECK(linalg::decomposition_check(m));
    for (std::size_t n = 0; n < rep.ker_dims.size(); ++n)
      CHECK(rep.ker_dims[n] + rep.im_dims[n] == m.rows);
  }
}

TEST_CASE("kernel dimension one keeps the eventual-image identity") {
  // Shift-like map with a one-dimensional kernel.
  auto m = from_ints(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  auto k = linalg::kernel_basis(m);
  CHECK(k.dim() == 1);
  CHECK(linalg::stable_subspace(m) == linalg::image_basis(linalg::mat_pow(m, 4)));
}

TEST_CASE("linearized staircase truncation matches the set computation") {
  for (int n = 1; n <= 4; ++n) {
    auto t = staircase::truncate(n);
    const int d = t.map.size;
    RationalMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(t.map.succ[i], i) = 1;
    auto q = fgraph::four_sets(t.map);
    auto stable = linalg::stable_subspace(m);
    CHECK(stable.dim() == static_cast<int>(q.stab.size()));
    CHECK(stable == linalg::image_basis(linalg::mat_pow(m, d)));
  }
}
