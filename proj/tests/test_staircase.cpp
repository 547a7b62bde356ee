#include <doctest.h>

#include <stdexcept>

#include "stabset/fgraph.hpp"
#include "stabset/staircase.hpp"

using namespace stabset;
using staircase::Z2Point;

TEST_CASE("staircase map rules") {
  CHECK(staircase::apply({3, 1}) == Z2Point{3, 0});
  CHECK(staircase::apply({1, 0}) == Z2Point{0, 0});
  CHECK(staircase::apply({-2, 0}) == Z2Point{-3, 0});
  CHECK_THROWS_AS(staircase::apply({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(staircase::apply({3, 5}), std::invalid_argument);
}

TEST_CASE("staircase classification") {
  auto left = staircase::classify({-5, 0});
  CHECK(left.in_atrac);
  CHECK(!left.in_stab);
  CHECK(left.behavior == staircase::ChainBehavior::UnboundedFiniteChains);

  auto column = staircase::classify({3, 2});
  CHECK(!column.in_atrac);
  CHECK(!column.in_stab);
  CHECK(column.behavior == staircase::ChainBehavior::BoundedChains);
  CHECK(column.max_chain == 0);

  auto origin = staircase::classify({0, 0});
  CHECK(origin.in_atrac);
  CHECK(!origin.in_stab);
  CHECK(origin.behavior == staircase::ChainBehavior::UnboundedFiniteChains);
}

TEST_CASE("staircase backward search matches the preimage structure") {
  // (0,0) has preimages (k,0) for every k >= 1; chains of every length exist.
  for (int depth : {1, 5, 20, 100}) {
    auto chain = staircase::backward_search({0, 0}, depth);
    REQUIRE(chain.has_value());
    CHECK(static_cast<int>(chain->size()) == depth + 1);
    for (std::size_t i = 0; i + 1 < chain->size(); ++i)
      CHECK(staircase::apply((*chain)[i + 1]) == (*chain)[i]);
  }
  // Column points only climb: (3,0) has the chain (3,0) <- (3,1) <- (3,2).
  CHECK(staircase::backward_search({3, 0}, 2).has_value());
  CHECK(!staircase::backward_search({3, 0}, 3).has_value());
  // (1,0) has no preimage at all.
  CHECK(!staircase::backward_search({1, 0}, 1).has_value());
}

TEST_CASE("truncation window N=1") {
  auto t = staircase::truncate(1);
  REQUIRE(t.map.size == 3);
  // Sorted carrier: (-1,0), (0,0), (1,0); the boundary point loops.
  CHECK(t.label_to_point[0] == Z2Point{-1, 0});
  CHECK(t.map.succ == std::vector<int>{0, 0, 1});
}

TEST_CASE("truncation window N=2 routes the bottom row through the origin") {
  auto t = staircase::truncate(2);
  int l21 = t.label_of({2, 1});
  int l20 = t.label_of({2, 0});
  int l00 = t.label_of({0, 0});
  CHECK(t.map.succ[l21] == l20);
  CHECK(t.map.succ[l20] == l00);
}

TEST_CASE("truncated staircase collapses to the boundary loop") {
  // Inside the window every chain into (0,0) is capped by the column heights,
  // so all four sets shrink to the self-loop at (-N,0).
  for (int n = 1; n <= 6; ++n) {
    auto t = staircase::truncate(n);
    auto q = fgraph::four_sets(t.map);
    std::vector<int> loop{t.label_of({-n, 0})};
    CHECK(q.stab == loop);
    CHECK(q.atrac == loop);
    CHECK(q.fix == loop);
  }
}

TEST_CASE("classifier agrees with depth-limited search across the window") {
  for (long long n = -10; n <= 10; ++n) {
    long long cap = std::max(n - 1, 0LL);
    for (long long m = 0; m <= cap; ++m) {
      auto rep = staircase::classify({n, m});
      for (int depth : {1, 2, 3, 7, 25, 100}) {
        bool found = staircase::backward_search({n, m}, depth).has_value();
        bool expected = rep.behavior == staircase::ChainBehavior::UnboundedFiniteChains
                            ? true
                            : depth <= rep.max_chain;
        CHECK(found == expected);
      }
    }
  }
}
