#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include <anarchy/bridge.hpp>
#include <anarchy/cost.hpp>
#include <anarchy/fixtures.hpp>
#include <oracles.hpp>

using namespace anarchy;

namespace {

GameParams simple_params(int n, Rat alpha) {
  return GameParams{.n = n, .alpha = std::move(alpha), .rule = FormationRule::Bilateral,
                    .adversary = SimpleMinded{}};
}

}  // namespace

TEST_SUITE_BEGIN("cost");

TEST_CASE("star costs under the uniform adversary") {
  const GameParams params = simple_params(5, Rat(1));
  const StrategyProfile s = canonical_blf_profile(make_star(5));
  CHECK(player_cost(s, 2, params) == ExtRat(Rat(1) + Rat(7, 4)));
  CHECK(player_cost(s, 1, params) == ExtRat(Rat(4) + Rat(1)));
  CHECK(social_cost(s, params) == ExtRat(16));
  CHECK(cost_ratio_to_optimum(s, params) == ExtRat(Rat(8, 5)));

  const CostReport report = cost_report(s, params);
  CHECK(report.m == 4);
  CHECK(report.social == ExtRat(16));
  CHECK(report.players.size() == 5);
  CHECK(report.players[0].player == 1);
  CHECK(report.players[0].building == Rat(4));
  CHECK(report.players[0].indirect == ExtRat(1));
  CHECK(report.players[0].total == ExtRat(5));
  CHECK(report.players[1].indirect == ExtRat(Rat(7, 4)));
  ExtRat sum = 0;
  for (const auto& row : report.players) sum += row.total;
  CHECK(sum == report.social);
}

TEST_CASE("indirect cost weighs relevance by attack probability") {
  const Graph path(3, {{1, 2}, {2, 3}});
  CustomTable table{{{Link{1, 2}, Rat(1, 4)}, {Link{2, 3}, Rat(3, 4)}}};
  CHECK(indirect_cost(path, 1, distribution(path, table)) == ExtRat(Rat(5, 4)));
  CHECK(indirect_cost(path, 2, distribution(path, table)) == ExtRat(1));
  CHECK(indirect_cost(path, 3, distribution(path, table)) == ExtRat(Rat(7, 4)));
  CHECK(indirect_cost(path, 1, distribution(path, SimpleMinded{})) == ExtRat(Rat(3, 2)));
  CHECK(indirect_cost(path, 1, distribution(path, Smart{})).finite() > 0);
}

TEST_CASE("disconnection costs everything") {
  StrategyProfile s(4);  // empty profile, no links at all
  CHECK(player_cost(s, 1, simple_params(4, Rat(1))).is_infinite());
  CHECK(social_cost(s, simple_params(4, Rat(1))).is_infinite());
  CHECK(cost_ratio_to_optimum(s, simple_params(4, Rat(1))).is_infinite());
  // requests still get paid even though the graph falls apart
  StrategyProfile t = canonical_blf_profile(Graph(4, {{1, 2}}));
  CHECK(player_cost(t, 1, simple_params(4, Rat(1))).is_infinite());
}

TEST_CASE("unilateral building charges only the requester") {
  const GameParams params{.n = 9, .alpha = Rat(2), .rule = FormationRule::Unilateral,
                          .adversary = SimpleMinded{}};
  const StrategyProfile cycle = make_directed_cycle_profile(9);
  for (PlayerId v = 1; v <= 9; ++v) {
    CHECK(player_cost(cycle, v, params) == ExtRat(2));  // one request, no bridges
  }
  CHECK(social_cost(cycle, params) == ExtRat(18));

  const StrategyProfile star = make_star_outward_profile(9);
  CHECK(player_cost(star, 2, params) == ExtRat(Rat(15, 8)));  // no requests, only risk
  CHECK(player_cost(star, 1, params) == ExtRat(Rat(16) + Rat(1)));
  CHECK(social_cost(star, params) == ExtRat(Rat(16) + Rat(16)));
}

TEST_CASE("social cost matches the per-player oracle") {
  std::mt19937_64 rng(52001);
  std::uniform_int_distribution<int> pick_n(3, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = pick_n(rng);
    const Graph g = oracle::random_connected(rng, n, 1, 3);
    for (const AdversaryKind kind : {AdversaryKind(SimpleMinded{}), AdversaryKind(Smart{})}) {
      GameParams params{.n = n, .alpha = Rat(3, 2), .rule = FormationRule::Bilateral,
                        .adversary = kind};
      const StrategyProfile s = canonical_blf_profile(g);
      CHECK(social_cost(s, params) == oracle::social_cost(s, params));
      for (PlayerId v = 1; v <= n; ++v) {
        CHECK(player_cost(s, v, params) == oracle::player_cost(s, v, params));
      }
    }
  }
}

TEST_CASE("optimum switches from cycle to star at alpha = n - 1") {
  CHECK(optimum(5, Rat(1)).value == Rat(10));
  CHECK(optimum(5, Rat(1)).witness == make_cycle(5));
  CHECK(optimum(5, Rat(9, 2)).value == Rat(44));
  CHECK(optimum(5, Rat(9, 2)).witness == make_star(5));
  CHECK(optimum(5, Rat(4)).value == Rat(40));  // tie
  CHECK(optimum(5, Rat(4)).witness == make_cycle(5));
  for (int n : {4, 7, 12}) {
    for (const Rat& alpha : {Rat(1, 3), Rat(2), Rat(n - 1), Rat(50)}) {
      CHECK(optimum(n, alpha).value == opt_lower_bound(n, alpha));
      CHECK(opt_lower_bound(n, alpha) ==
            std::min(Rat(2 * n) * alpha, Rat(2 * (n - 1)) * (alpha + 1)));
    }
  }
  CHECK_THROWS_AS(optimum(2, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(optimum(4, Rat(0)), std::invalid_argument);
}

TEST_CASE("no connected graph beats the claimed optimum") {
  for (int n : {4, 5}) {
    for (const Rat& alpha : {Rat(1, 2), Rat(3), Rat(n - 1)}) {
      for (const AdversaryKind kind : {AdversaryKind(SimpleMinded{}), AdversaryKind(Smart{})}) {
        GameParams params{.n = n, .alpha = alpha, .rule = FormationRule::Bilateral,
                          .adversary = kind};
        ExtRat best = ExtRat::infinity();
        oracle::for_each_connected(n, [&](const Graph& g) {
          const ExtRat sc = oracle::social_cost(canonical_blf_profile(g), params);
          if (sc < best) best = sc;
        });
        CHECK(best == ExtRat(optimum(n, alpha).value));
      }
    }
  }
}

TEST_CASE("a bypass link is worth its path relevance") {
  std::mt19937_64 rng(52002);
  std::uniform_int_distribution<int> pick_n(4, 10);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_connected(rng, pick_n(rng), 1, 4);
    const BridgeTree t = bridge_tree(g);
    if (t.node_count() < 2) continue;
    const auto nodes = t.nodes();
    const PlayerId u = nodes[rng() % nodes.size()];
    const PlayerId w = nodes[rng() % nodes.size()];
    if (u == w || g.has_link(u, w)) continue;
    const auto path = tree_path(t, u, w);
    const long long going = path_relevance(t, path, PathEnd::First);
    const Graph bypassed = g.with_link(u, w);
    const Rat before = indirect_cost(g, u, distribution(g, SimpleMinded{})).finite();
    const Rat after = indirect_cost(bypassed, u, distribution(bypassed, SimpleMinded{})).finite();
    CHECK(before - after >= Rat(going, g.m() + 1));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_SUITE_END();
