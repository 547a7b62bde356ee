#include <doctest.h>

#include <stdexcept>

#include "stabset/fgraph.hpp"
#include "stabset/prng.hpp"
#include "stabset/random_instances.hpp"

using namespace stabset;
using fgraph::FiniteSelfMap;

TEST_CASE("four sets on a single fixed point") {
  auto f = FiniteSelfMap::create({0});
  auto q = fgraph::four_sets(f);
  std::vector<int> all{0};
  CHECK(q.fix == all);
  CHECK(q.orb == all);
  CHECK(q.stab == all);
  CHECK(q.atrac == all);
}

TEST_CASE("four sets on a pure 3-cycle") {
  auto f = FiniteSelfMap::create({1, 2, 0});
  auto q = fgraph::four_sets(f);
  CHECK(q.fix.empty());
  std::vector<int> all{0, 1, 2};
  CHECK(q.orb == all);
  CHECK(q.stab == all);
  CHECK(q.atrac == all);
}

TEST_CASE("four sets with a tail into a fixed point") {
  // 0 fixed, 1 -> 0, 2 -> 1: images shrink {0,1,2} -> {0,1} -> {0}.
  auto f = FiniteSelfMap::create({0, 0, 1});
  auto q = fgraph::four_sets(f);
  std::vector<int> zero{0};
  CHECK(q.fix == zero);
  CHECK(q.orb == zero);
  CHECK(q.stab == zero);
  CHECK(q.atrac == zero);
}

TEST_CASE("invalid successor label is rejected") {
  CHECK_THROWS_AS(FiniteSelfMap::create({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSelfMap::create({}), std::invalid_argument);
}

TEST_CASE("greatest stabilized subset") {
  CHECK(fgraph::greatest_stabilized_subset(FiniteSelfMap::create({0})) == std::vector<int>{0});
  // phi({0,1}) = {0,1}; adding 2 breaks equality.
  CHECK(fgraph::greatest_stabilized_subset(FiniteSelfMap::create({1, 0, 0})) ==
        std::vector<int>{0, 1});
  CHECK(fgraph::greatest_stabilized_subset(FiniteSelfMap::create({0, 0, 1})) ==
        std::vector<int>{0});
}

TEST_CASE("backward chain on a cycle walks forever") {
  auto f = FiniteSelfMap::create({1, 2, 0});
  auto chain = fgraph::backward_chain(f, 0, 10);
  REQUIRE(chain.has_value());
  CHECK(chain->size() == 11);
  for (std::size_t i = 0; i + 1 < chain->size(); ++i) CHECK(f.succ[(*chain)[i + 1]] == (*chain)[i]);
}

TEST_CASE("backward chain respects missing preimages") {
  auto f = FiniteSelfMap::create({0, 0, 1});
  CHECK(!fgraph::backward_chain(f, 2, 1).has_value());
  auto chain = fgraph::backward_chain(f, 0, 50);
  REQUIRE(chain.has_value());
  CHECK(chain->size() == 51);
  // Smallest-label preimage of 0 is 0 itself.
  CHECK((*chain)[1] == 0);
}

TEST_CASE("backward chain picks the lexicographically smallest viable preimage") {
  // 0 <- 1 <- 2 and 0 <- 3 <- 4 <- 5: at depth 4 the chain must go through 3.
  auto f = FiniteSelfMap::create({0, 0, 1, 0, 3, 4});
  auto chain = fgraph::backward_chain(f, 0, 4);
  REQUIRE(chain.has_value());
  CHECK((*chain)[1] == 0);  // 0 is its own preimage and sits on a cycle
  auto deep = fgraph::backward_chain(f, 5, 1);
  CHECK(!deep.has_value());
}

TEST_CASE("random maps: chain holds and stab equals atrac") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    auto f = gen::random_fmap(rng, 80);
    auto q = fgraph::four_sets(f);
    CHECK(q.inclusion_chain_holds());
    CHECK(q.stab == q.atrac);
    CHECK(fgraph::image_of(f, q.stab) == q.stab);
  }
}
