#pragma once

// Named graphs and profiles used by the test batteries and the CLI.
// Graph fixtures stand for their canonical bilateral profiles; the two
// profile fixtures carry explicit owners for the unilateral rule.

#include <string>
#include <variant>

#include "anarchy/game.hpp"
#include "anarchy/graph.hpp"
#include "anarchy/rational.hpp"

namespace anarchy {

Graph make_cycle(int n);  // 1-2-...-n-1
Graph make_star(int n);   // hub 1, leaves 2..n

// Hub u0 = 1 joined to the centers of three stars of sizes n0, n0-1, n0-2
// (center first, then its leaves, stars in decreasing size). n = 3*n0 - 2,
// n0 >= 3. The link {u0, u1} separates the most ordered pairs:
// sep = 2 n0 (n - n0).
Graph make_three_stars(int n0);

// Cycle on n - len vertices (1..n-len) with a path of len links hanging off
// vertex 1: 1 - (n-len+1) - ... - n. Requires len >= 1 and n >= len + 3.
Graph make_cycle_with_path(int n, int len);

// Fixed 22-vertex showcase with a rich bridge structure: three non-trivial
// 2-edge-connected blocks (sizes 4, 7, 3), eight single-vertex components,
// ten bridges, bridge tree diameter 8. Handy for exercising the tree code.
Graph make_bridge_showcase();

// Unilateral profiles: every player requests the next around the cycle;
// the hub requests every leaf.
StrategyProfile make_directed_cycle_profile(int n);
StrategyProfile make_star_outward_profile(int n);

// "name" or "name:a" or "name:a,b". Names: cycle, star, three_stars,
// cycle_with_path, bridge_showcase, directed_cycle_profile,
// star_outward_profile.
std::variant<Graph, StrategyProfile> make_fixture(const std::string& text);

// Constants behind the separation bound for stable graphs: paths in the
// bridge tree of a pairwise stable graph stay short once alpha >= alpha0(n),
// which caps total separation at 2 (2 + c) n^2 alpha.
struct BoundConstants {
  long long c = 4;
  Rat alpha0;  // (1/8) (1 + 1/(n-1))^2, at most 9/32 once n >= 3
};

BoundConstants bound_constants(int n);  // n >= 2

}  // namespace anarchy
