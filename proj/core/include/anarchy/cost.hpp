#pragma once

// Player and social cost. A player pays alpha per request plus her expected
// disconnection damage: sum over links of rel(e, v) * Pr{e}, infinite when
// the built graph is disconnected.

#include <vector>

#include "anarchy/adversary.hpp"
#include "anarchy/bridge.hpp"
#include "anarchy/game.hpp"
#include "anarchy/rational.hpp"

namespace anarchy {

// dist must describe g. Infinite iff g is disconnected.
ExtRat indirect_cost(const Graph& g, PlayerId v, const LinkDistribution& dist);

ExtRat player_cost(const StrategyProfile& s, PlayerId v, const GameParams& params);

// Sum of all player costs. For a connected essential profile this equals
// (2m under bilateral, m under unilateral) * alpha + expected separation.
ExtRat social_cost(const StrategyProfile& s, const GameParams& params);

struct PlayerCostRow {
  PlayerId player = 0;
  Rat building;
  ExtRat indirect;
  ExtRat total;
};

struct CostReport {
  std::vector<PlayerCostRow> players;
  ExtRat social;
  int m = 0;
};

CostReport cost_report(const StrategyProfile& s, const GameParams& params);

struct Optimum {
  Rat value;
  Graph witness;
};

// Cheapest social cost over all profiles: the cycle (2 n alpha) up to
// alpha = n-1, the star (2 (n-1) (alpha+1)) beyond; either graph at the tie.
// Holds for every adversary, so no adversary argument.
Optimum optimum(int n, const Rat& alpha);

// min(2 n alpha, 2 (n-1) (alpha + 1)); equals optimum(n, alpha).value.
Rat opt_lower_bound(int n, const Rat& alpha);

// social_cost(s) / optimum(n, alpha); infinite when s builds a disconnected
// graph.
ExtRat cost_ratio_to_optimum(const StrategyProfile& s, const GameParams& params);

}  // namespace anarchy
