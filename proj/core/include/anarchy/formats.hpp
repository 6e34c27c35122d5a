#pragma once

// Text formats.
//
//   graph file:    "graph <n> <m>" then one "v w" line per link
//   profile file:  "profile <n>" then one "v w" line per request (v asks w)
//
// '#' starts a comment, blank lines are skipped. Readers throw
// std::invalid_argument naming the offending line. Writers emit files the
// readers round-trip byte for byte.

#include <iosfwd>
#include <string>

#include "anarchy/adversary.hpp"
#include "anarchy/game.hpp"
#include "anarchy/graph.hpp"

namespace anarchy {

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

StrategyProfile read_profile(std::istream& in);
StrategyProfile read_profile_file(const std::string& path);
void write_profile(std::ostream& out, const StrategyProfile& s);

// JSON object mapping links to exact probabilities: {"1-2": "1/3", ...}.
// Checking the table against a graph is distribution()'s job.
CustomTable read_custom_table(std::istream& in);
CustomTable read_custom_table_file(const std::string& path);

// Graphviz source. Bridges come out crimson with their separation as label;
// on a connected graph the smart adversary's targets are drawn bold.
std::string dot_graph(const Graph& g);

}  // namespace anarchy
