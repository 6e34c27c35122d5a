#pragma once

// Test-side reference implementations. Everything here recomputes results
// from first principles with plain adjacency lists and breadth-first
// searches, sharing no machinery with the library beyond the public value
// types. Slow on purpose.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include <anarchy/cost.hpp>
#include <anarchy/game.hpp>
#include <anarchy/graph.hpp>
#include <anarchy/rational.hpp>

namespace anarchy::oracle {

// Vertices reachable from `from` when the link `skip` is ignored; pass
// {0, 0} to skip nothing.
std::vector<PlayerId> reachable(const Graph& g, PlayerId from, Link skip);

bool connected(const Graph& g);

// Bridges by deletion: a link is a bridge iff removing it disconnects its
// endpoints. Sorted.
std::vector<Link> bridges(const Graph& g);

// Vertices v cannot reach once e is removed.
long long relevance(const Graph& g, Link e, PlayerId v);

long long separation_pairs(const Graph& g, Link e);  // 2 nu (n - nu)

// Distribution of the named built-in adversaries, recomputed from the
// deletion-based separation values. Throws on CustomTable.
std::vector<std::pair<Link, Rat>> distribution(const Graph& g, const AdversaryKind& kind);

ExtRat player_cost(const StrategyProfile& s, PlayerId v, const GameParams& params);
ExtRat social_cost(const StrategyProfile& s, const GameParams& params);

// Pairwise stability straight from the definition: no seller strictly gains
// by cutting one of her links, and no absent link is a weak improvement for
// both endpoints at once. Bilateral rule, built-in adversaries only.
bool pairwise_stable(const Graph& g, const GameParams& params);

// All graphs on n labeled vertices via edge masks, connected ones only.
// Independent of the library's enumeration (own connectivity check).
void for_each_connected(int n, const std::function<void(const Graph&)>& fn);

// Uniformly random spanning-tree-plus-extras graph: a random attachment tree
// on [n], then each remaining pair kept with probability num/den.
Graph random_connected(std::mt19937_64& rng, int n, int extra_num, int extra_den);

}  // namespace anarchy::oracle
