#pragma once

// Equilibrium predicates, exhaustive enumeration, price of anarchy, and
// improving-move dynamics. All checks are exact; deviations are searched
// outright rather than argued away, so the theory can be audited against
// brute force at small n.
//
// Equality conventions, used verbatim everywhere:
//   joint addition blocks stability iff both endpoints weakly gain;
//   a unilateral change must gain strictly to refute an equilibrium.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anarchy/cost.hpp"
#include "anarchy/game.hpp"
#include "anarchy/graph.hpp"

namespace anarchy {

enum class EqConcept {
  NeUlf,     // Nash under the unilateral rule
  MaxNeUlf,  // Nash, and every nonempty set of extra requests strictly hurts
  PneBlf,    // Nash under the bilateral rule plus no blocking joint addition
  PsBlf,     // pairwise stable: no blocking addition, no improving removal
};

std::string concept_name(EqConcept c);
EqConcept concept_from_name(const std::string& name);

struct DeviationWitness {
  enum class Kind { RowReplacement, AddRequests, DropLinks, RemoveLink, AddLink };
  Kind kind = Kind::RowReplacement;
  PlayerId player = 0;             // the deviating player / seller / buyer
  PlayerId partner = 0;            // AddLink: the other endpoint
  std::vector<Link> links;         // links changed by the deviation
  ExtRat cost_before, cost_after;  // player's costs
  ExtRat partner_before, partner_after;  // AddLink only

  std::string describe() const;
};

struct CheckResult {
  bool holds = false;
  std::optional<DeviationWitness> witness;  // set iff !holds
  explicit operator bool() const { return holds; }
};

// Full row-replacement search, 2^(n-1) candidate rows per player. n <= 12.
CheckResult is_nash_ulf(const StrategyProfile& s, const GameParams& params);

// Nash plus: every nonempty request set for currently absent links strictly
// worsens its buyer. n <= 12.
CheckResult is_max_ne_ulf(const StrategyProfile& s, const GameParams& params);

// Bilateral-rule Nash (every subset of a player's incident links dropped)
// plus no blocking joint addition. The graph stands for its canonical
// bilateral profile. Degrees above 20 are rejected: the drop search is
// 2^deg(v).
CheckResult is_pne(const Graph& g, const GameParams& params);

// No link's removal strictly helps an endpoint, no absent link's joint
// addition weakly helps both. Polynomial, no size cap.
CheckResult is_pairwise_stable(const Graph& g, const GameParams& params);

// Removing links one at a time never understates the damage of removing them
// together:
//   I_v(S - all) - I_v(S)  >=  sum_i (I_v(S - w_i) - I_v(S)).
// Evaluated in the rearranged form I_v(S - all) + (k-1) I_v(S) >= sum_i
// I_v(S - w_i) so infinities never meet a subtraction. Every {v, w_i} must be
// a built link.
bool convexity_holds(const StrategyProfile& s, PlayerId v,
                     const std::vector<PlayerId>& removals, const GameParams& params);

struct EnumOptions {
  bool connected_only = true;     // disconnected profiles are never stable
  bool dedup_isomorphic = false;  // one graph per isomorphism class
  int threads = 0;                // 0: ANARCHY_LAB_THREADS or hardware
};

// Every equilibrium profile for the concept, deterministic order (candidate
// masks ascending), independent of the worker count. Caps: n <= 8 for the
// bilateral concepts, n <= 7 for the unilateral ones (owner assignments
// multiply the space). Custom adversaries are rejected: their tables price a
// single fixed graph, so deviation costs would be undefined.
std::vector<StrategyProfile> enumerate_equilibria(const GameParams& params, EqConcept c,
                                                  const EnumOptions& options = {});

struct PoAReport {
  GameParams params;
  EqConcept target = EqConcept::PsBlf;
  Rat optimum;
  long long count = 0;  // equilibria inspected
  // unset when no equilibrium exists; that is a result, not an error
  std::optional<Rat> worst_social;
  std::optional<Rat> ratio;
  std::optional<StrategyProfile> witness;  // first worst in enumeration order
};

PoAReport price_of_anarchy(const GameParams& params, EqConcept c,
                           const EnumOptions& options = {});

enum class DynamicsPolicy {
  Lexicographic,  // smallest improving move; removals before additions
  SeededRandom,   // uniform among improving moves, explicit seed
};

struct DynamicsMove {
  bool removal = false;
  Link link;
  PlayerId seller = 0;  // removals only
};

struct DynamicsResult {
  std::vector<DynamicsMove> trajectory;
  Graph final_graph;
  bool stable = false;  // no improving move remained
};

// Applies improving moves until none exists or max_steps is hit. A removal
// must strictly help its seller; an addition must weakly help both ends
// (exactly the conditions whose absence defines pairwise stability, so a
// stable endpoint is pairwise stable). Start graph must be connected; the
// dynamics then never disconnect it.
DynamicsResult pairwise_dynamics(const Graph& start, const GameParams& params,
                                 DynamicsPolicy policy, std::uint64_t seed,
                                 int max_steps);

}  // namespace anarchy
