#include <benchmark/benchmark.h>

#include <random>

#include <anarchy/bridge.hpp>
#include <anarchy/cost.hpp>
#include <anarchy/enumerate.hpp>
#include <anarchy/equilibrium.hpp>
#include <anarchy/fixtures.hpp>

using namespace anarchy;

namespace {

Graph random_graph(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  return random_connected_graph(rng, n, 0.15);
}

void BM_BridgeScan(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bridges(g));
  }
}
BENCHMARK(BM_BridgeScan)->Arg(32)->Arg(128)->Arg(512);

void BM_TotalSeparation(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_separation(g));
  }
}
BENCHMARK(BM_TotalSeparation)->Arg(32)->Arg(128)->Arg(512);

void BM_RelevanceAllPairs(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    long long total = 0;
    for (const Link& e : g.links()) {
      for (PlayerId v = 1; v <= g.n(); ++v) total += relevance(g, e, v);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_RelevanceAllPairs)->Arg(16)->Arg(32);

void BM_SocialCost(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 17);
  const StrategyProfile s = canonical_blf_profile(g);
  const GameParams params{.n = g.n(), .alpha = Rat(1), .rule = FormationRule::Bilateral,
                          .adversary = Smart{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(social_cost(s, params));
  }
}
BENCHMARK(BM_SocialCost)->Arg(32)->Arg(128);

void BM_PairwiseStableCheck(benchmark::State& state) {
  const Graph g = make_cycle_with_path(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(0)) / 4);
  const GameParams params{.n = g.n(), .alpha = Rat(1), .rule = FormationRule::Bilateral,
                          .adversary = SimpleMinded{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_pairwise_stable(g, params));
  }
}
BENCHMARK(BM_PairwiseStableCheck)->Arg(16)->Arg(32);

void BM_PneCheck(benchmark::State& state) {
  const Graph g = make_three_stars(static_cast<int>(state.range(0)));
  const GameParams params{.n = g.n(), .alpha = Rat(5, 2), .rule = FormationRule::Bilateral,
                          .adversary = Smart{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_pne(g, params));
  }
}
BENCHMARK(BM_PneCheck)->Arg(5)->Arg(9);

void BM_EnumeratePs(benchmark::State& state) {
  const GameParams params{.n = static_cast<int>(state.range(0)), .alpha = Rat(1),
                          .rule = FormationRule::Bilateral, .adversary = SimpleMinded{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_equilibria(params, EqConcept::PsBlf));
  }
}
BENCHMARK(BM_EnumeratePs)->Arg(4)->Arg(5);

void BM_CanonicalMask(benchmark::State& state) {
  const std::uint64_t mask = 0b100110101100101011011;  // a connected 7-player graph
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_mask(7, mask));
  }
}
BENCHMARK(BM_CanonicalMask);

}  // namespace

BENCHMARK_MAIN();
