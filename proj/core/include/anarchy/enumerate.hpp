#pragma once

// Exhaustive and randomized graph generation behind the equilibrium
// enumerations and the property batteries. Labeled graphs on n vertices are
// encoded as bit masks over a fixed pair order so ranges can be chunked
// deterministically.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "anarchy/graph.hpp"

namespace anarchy {

// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n)
std::vector<Link> pair_order(int n);

std::uint64_t graph_mask(const Graph& g);  // bits follow pair_order
Graph graph_from_mask(int n, std::uint64_t mask);
bool mask_connected(int n, std::uint64_t mask);

// Every connected labeled graph, masks ascending. n <= 8.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

// Isomorphism-invariant canonical encoding: the smallest relabeling that
// respects the refined degree classes. Equal masks iff isomorphic. n <= 8.
std::uint64_t canonical_mask(int n, std::uint64_t mask);

// One representative per isomorphism class of connected graphs, ascending.
// Built by extending the (n-1)-vertex classes and cached per n. n <= 8.
const std::vector<std::uint64_t>& connected_class_reps(int n);

// Random spanning tree (uniform) plus each remaining pair independently.
Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_link_prob);

// Worker count: the explicit request if positive, else the hardware count;
// either way capped by ANARCHY_LAB_THREADS when set. Always at least 1.
int resolve_threads(int requested);

}  // namespace anarchy
