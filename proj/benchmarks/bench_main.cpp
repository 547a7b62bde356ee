#include <benchmark/benchmark.h>

#include "stabset/fgraph.hpp"
#include "stabset/freegroup.hpp"
#include "stabset/hilbert.hpp"
#include "stabset/linalg.hpp"
#include "stabset/prng.hpp"
#include "stabset/random_instances.hpp"
#include "stabset/runlength.hpp"
#include "stabset/substitution.hpp"

namespace {

using namespace stabset;

void BM_four_sets(benchmark::State& state) {
  Rng rng(1);
  std::vector<int> succ(state.range(0));
  for (int& s : succ) s = static_cast<int>(rng.below(succ.size()));
  auto f = fgraph::FiniteSelfMap::create(succ);
  for (auto _ : state) {
    auto q = fgraph::four_sets(f);
    benchmark::DoNotOptimize(q.stab.size());
  }
}
BENCHMARK(BM_four_sets)->Arg(1000)->Arg(100000);

void BM_backward_chain(benchmark::State& state) {
  Rng rng(2);
  std::vector<int> succ(10000);
  for (int& s : succ) s = static_cast<int>(rng.below(succ.size()));
  auto f = fgraph::FiniteSelfMap::create(succ);
  auto q = fgraph::four_sets(f);
  for (auto _ : state) {
    auto chain = fgraph::backward_chain(f, q.stab.front(), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(chain.has_value());
  }
}
BENCHMARK(BM_backward_chain)->Arg(32)->Arg(256);

void BM_kernel_chain(benchmark::State& state) {
  Rng rng(3);
  auto m = gen::random_matrix(rng, static_cast<int>(state.range(0)));
  while (m.rows != state.range(0)) m = gen::random_matrix(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = linalg::chain_report(m);
    benchmark::DoNotOptimize(rep.stab_index);
  }
}
BENCHMARK(BM_kernel_chain)->Arg(6)->Arg(8);

void BM_shift_relations(benchmark::State& state) {
  hilbert::TruncationWindow w{static_cast<std::uint64_t>(state.range(0)),
                              static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    bool ok = true;
    for (std::uint64_t k = 2; k <= w.k_max; ++k)
      for (std::uint64_t j = 2; j <= k; ++j)
        ok = ok && hilbert::verify_shift_relation(k, j, w).pass();
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_shift_relations)->Arg(20)->Arg(40);

void BM_thue_morse_expansion(benchmark::State& state) {
  subst::Substitution tm("ab", {"ab", "ba"});
  auto spec = subst::fixed_point_specs(tm).specs.front();
  for (auto _ : state) {
    auto w = subst::expand_fixed_point(tm, spec, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK(BM_thue_morse_expansion)->Arg(1 << 12)->Arg(1 << 18);

void BM_kolakoski(benchmark::State& state) {
  for (auto _ : state) {
    auto k = monoid::kolakoski(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(k.size());
  }
}
BENCHMARK(BM_kolakoski)->Arg(1 << 14)->Arg(1 << 20);

void BM_stallings_fold(benchmark::State& state) {
  Rng rng(4);
  auto phi = gen::random_endo(rng, 3, 4);
  auto gens = phi.iterated_images(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    freegrp::StallingsGraph g(gens, 3, false);
    benchmark::DoNotOptimize(g.rank());
  }
}
BENCHMARK(BM_stallings_fold)->Arg(3)->Arg(6);

void BM_pairing_inverse(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = 1; i <= 100000; ++i) acc += hilbert::alpha_inv(i).first;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_pairing_inverse);

}  // namespace

BENCHMARK_MAIN();
