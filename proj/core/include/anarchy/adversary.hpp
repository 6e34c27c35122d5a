#pragma once

// Adversaries assign each graph a probability measure over its links; the
// measured link is destroyed after formation. Two anonymous built-ins plus
// explicit per-link tables for a fixed graph.

#include <map>
#include <variant>
#include <vector>

#include "anarchy/graph.hpp"
#include "anarchy/rational.hpp"

namespace anarchy {

// Uniform over all links.
struct SimpleMinded {};

// Uniform over the links maximizing separation (ordered pairs split apart).
struct Smart {};

// Fixed table for one specific graph; keys must be links of that graph and
// values must sum to exactly 1.
struct CustomTable {
  std::map<Link, Rat> prob;
};

using AdversaryKind = std::variant<SimpleMinded, Smart, CustomTable>;

const char* adversary_name(const AdversaryKind& kind);

struct LinkDistribution {
  std::map<Link, Rat> prob;  // entries sum to exactly 1

  // 0 for links without an entry.
  Rat at(const Link& e) const {
    auto it = prob.find(e);
    return it == prob.end() ? Rat(0) : it->second;
  }
};

// Errors: graph with no links; Smart on a disconnected graph; custom table
// with keys off the graph or probabilities not summing to 1.
LinkDistribution distribution(const Graph& g, const AdversaryKind& kind);

struct CriticalLinks {
  std::vector<Link> links;  // argmax of separation, sorted
  long long sep_max = 0;    // 0 iff the graph is bridgeless
};

// Requires a connected graph with at least one link.
CriticalLinks critical_links(const Graph& g);

}  // namespace anarchy
