#pragma once

// Rendering for the anarchy CLI. Every renderer is a pure function of its
// inputs, so identical invocations print identical bytes. Rationals are
// always exact strings, never floats.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "anarchy/cost.hpp"
#include "anarchy/equilibrium.hpp"
#include "anarchy/game.hpp"
#include "anarchy/graph.hpp"

namespace anarchy::cli {

using Json = nlohmann::ordered_json;
using Input = std::variant<Graph, StrategyProfile>;

std::string link_str(const Link& e);
Graph built_graph(const Input& in, FormationRule rule);

Json params_json(const GameParams& params);
Json witness_json(const DeviationWitness& w);
Json profile_json(const StrategyProfile& s);
Json graph_json(const Graph& g);

Json analyze_json(const Input& in, const GameParams& params);
std::string analyze_text(const Input& in, const GameParams& params);

Json check_json(EqConcept c, const CheckResult& r);
std::string check_text(EqConcept c, const CheckResult& r);

Json enumerate_json(const GameParams& params, EqConcept c,
                    const std::vector<StrategyProfile>& hits, bool count_only);
std::string enumerate_text(const GameParams& params, EqConcept c,
                           const std::vector<StrategyProfile>& hits, bool count_only);

Json poa_json(const std::vector<PoAReport>& rows);
std::string poa_text(const std::vector<PoAReport>& rows);
std::string poa_csv(const std::vector<PoAReport>& rows);

Json dynamics_json(const GameParams& params, const DynamicsResult& r);
std::string dynamics_text(const GameParams& params, const DynamicsResult& r);

}  // namespace anarchy::cli
