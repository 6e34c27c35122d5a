#include "report.hpp"

#include <sstream>

#include "anarchy/adversary.hpp"
#include "anarchy/bridge.hpp"

namespace anarchy::cli {
namespace {

std::string arrow_str(PlayerId v, PlayerId w) {
  return std::to_string(v) + "->" + std::to_string(w);
}

std::vector<std::pair<PlayerId, PlayerId>> request_list(const StrategyProfile& s) {
  std::vector<std::pair<PlayerId, PlayerId>> out;
  for (PlayerId v = 1; v <= s.n(); ++v)
    for (PlayerId w = 1; w <= s.n(); ++w)
      if (s.requests(v, w)) out.emplace_back(v, w);
  return out;
}

const char* rule_name(FormationRule rule) {
  return rule == FormationRule::Bilateral ? "bilateral" : "unilateral";
}

// local star builder so report.cpp does not pull the fixture header
Graph make_star_like(int n) {
  std::vector<Link> links;
  for (PlayerId v = 2; v <= n; ++v) links.push_back(Link{1, v});
  return Graph(n, links);
}

const char* optimum_shape(int n, const Graph& witness) {
  return witness == make_star_like(n) ? "star" : "cycle";
}

std::string witness_kind_name(DeviationWitness::Kind k) {
  switch (k) {
    case DeviationWitness::Kind::RowReplacement: return "row_replacement";
    case DeviationWitness::Kind::AddRequests: return "add_requests";
    case DeviationWitness::Kind::DropLinks: return "drop_links";
    case DeviationWitness::Kind::RemoveLink: return "remove_link";
    case DeviationWitness::Kind::AddLink: return "add_link";
  }
  return "?";
}

std::string joined_links(const std::vector<Link>& links) {
  std::string out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i) out += ' ';
    out += link_str(links[i]);
  }
  return out;
}

}  // namespace

std::string link_str(const Link& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

Graph built_graph(const Input& in, FormationRule rule) {
  if (const Graph* g = std::get_if<Graph>(&in)) return *g;
  return build_graph(std::get<StrategyProfile>(in), rule);
}

Json params_json(const GameParams& params) {
  return Json{{"n", params.n},
              {"alpha", format_rat(params.alpha)},
              {"rule", rule_name(params.rule)},
              {"adversary", adversary_name(params.adversary)}};
}

Json witness_json(const DeviationWitness& w) {
  Json j{{"kind", witness_kind_name(w.kind)}, {"player", w.player}};
  if (w.kind == DeviationWitness::Kind::AddLink) j["partner"] = w.partner;
  Json links = Json::array();
  for (const Link& e : w.links) links.push_back(link_str(e));
  j["links"] = std::move(links);
  j["cost_before"] = w.cost_before.str();
  j["cost_after"] = w.cost_after.str();
  if (w.kind == DeviationWitness::Kind::AddLink) {
    j["partner_before"] = w.partner_before.str();
    j["partner_after"] = w.partner_after.str();
  }
  j["describe"] = w.describe();
  return j;
}

Json profile_json(const StrategyProfile& s) {
  Json requests = Json::array();
  for (const auto& [v, w] : request_list(s)) requests.push_back(arrow_str(v, w));
  return Json{{"n", s.n()}, {"requests", std::move(requests)}};
}

Json graph_json(const Graph& g) {
  Json links = Json::array();
  for (const Link& e : g.links()) links.push_back(link_str(e));
  return Json{{"n", g.n()}, {"m", g.m()}, {"connected", g.connected()}, {"links", std::move(links)}};
}

namespace {

Json costs_json(const CostReport& report, const GameParams& params) {
  Json players = Json::array();
  for (const PlayerCostRow& row : report.players)
    players.push_back(Json{{"player", row.player},
                           {"building", format_rat(row.building)},
                           {"indirect", row.indirect.str()},
                           {"total", row.total.str()}});
  const Optimum opt = optimum(params.n, params.alpha);
  Json j{{"players", std::move(players)},
         {"social", report.social.str()},
         {"optimum", format_rat(opt.value)},
         {"optimum_shape", optimum_shape(params.n, opt.witness)}};
  return j;
}

}  // namespace

Json analyze_json(const Input& in, const GameParams& params) {
  const Graph g = built_graph(in, params.rule);
  const StrategyProfile s = std::holds_alternative<StrategyProfile>(in)
                                ? std::get<StrategyProfile>(in)
                                : canonical_blf_profile(g);
  Json j;
  if (std::holds_alternative<StrategyProfile>(in)) {
    j["input"] = Json{{"kind", "profile"},
                      {"essential", is_essential(s, params.rule)},
                      {"profile", profile_json(s)}};
  } else {
    j["input"] = Json{{"kind", "graph"}};
  }
  j["graph"] = graph_json(g);
  j["params"] = params_json(params);

  if (g.connected()) {
    Json bj = Json::array();
    for (const Link& e : bridges(g)) {
      const Separation sep = separation(g, e);
      bj.push_back(Json{{"link", link_str(e)}, {"min_side", sep.min_side}, {"sep", sep.sep}});
    }
    j["bridges"] = std::move(bj);
    j["total_separation"] = total_separation(g);
    j["chord_free"] = chord_free(g);
    const BridgeTree t = bridge_tree(g);
    Json nodes = Json::array();
    for (PlayerId node : t.nodes())
      nodes.push_back(Json{{"node", node}, {"weight", t.weight(node)}});
    Json tlinks = Json::array();
    for (const Link& e : t.tree_links())
      tlinks.push_back(Json{{"tree_link", link_str(e)}, {"bridge", link_str(t.bridge_of(e))}});
    j["bridge_tree"] = Json{{"nodes", std::move(nodes)},
                            {"links", std::move(tlinks)},
                            {"diameter", tree_diameter(t)}};
    if (g.m() > 0) {
      Json dist;
      for (const auto& [e, p] : distribution(g, params.adversary).prob)
        dist[link_str(e)] = format_rat(p);
      j["distribution"] = std::move(dist);
    } else {
      j["distribution"] = nullptr;
    }
  } else {
    j["bridges"] = nullptr;
    j["total_separation"] = nullptr;
    j["chord_free"] = nullptr;
    j["bridge_tree"] = nullptr;
    j["distribution"] = nullptr;
  }

  Json costs = costs_json(cost_report(s, params), params);
  costs["ratio"] = cost_ratio_to_optimum(s, params).str();
  j["costs"] = std::move(costs);
  return j;
}

std::string analyze_text(const Input& in, const GameParams& params) {
  const Graph g = built_graph(in, params.rule);
  const StrategyProfile s = std::holds_alternative<StrategyProfile>(in)
                                ? std::get<StrategyProfile>(in)
                                : canonical_blf_profile(g);
  std::ostringstream os;
  if (std::holds_alternative<StrategyProfile>(in)) {
    const auto requests = request_list(s);
    os << "profile: n=" << s.n() << " requests=" << requests.size()
       << " essential=" << (is_essential(s, params.rule) ? "yes" : "no") << "\n";
    os << "requests:";
    for (const auto& [v, w] : requests) os << ' ' << arrow_str(v, w);
    os << "\n";
  }
  os << "graph: n=" << g.n() << " m=" << g.m()
     << " connected=" << (g.connected() ? "yes" : "no") << "\n";
  os << "links:";
  for (const Link& e : g.links()) os << ' ' << link_str(e);
  os << "\n";
  os << "params: alpha=" << format_rat(params.alpha) << " rule=" << rule_name(params.rule)
     << " adversary=" << adversary_name(params.adversary) << "\n";

  if (g.connected()) {
    const auto bs = bridges(g);
    os << "bridges: " << bs.size() << "\n";
    for (const Link& e : bs) {
      const Separation sep = separation(g, e);
      os << "  " << link_str(e) << ": min_side " << sep.min_side << ", sep " << sep.sep << "\n";
    }
    os << "total separation: " << total_separation(g) << "\n";
    os << "chord-free: " << (chord_free(g) ? "yes" : "no") << "\n";
    const BridgeTree t = bridge_tree(g);
    os << "bridge tree: " << t.node_count() << " nodes, diameter " << tree_diameter(t) << "\n";
    for (PlayerId node : t.nodes()) {
      os << "  node " << node << ": weight " << t.weight(node) << ", neighbors";
      for (PlayerId nb : t.tree_neighbors(node)) os << ' ' << nb;
      os << "\n";
    }
    if (g.m() > 0) {
      os << "distribution:";
      for (const auto& [e, p] : distribution(g, params.adversary).prob)
        os << ' ' << link_str(e) << ':' << format_rat(p);
      os << "\n";
    }
  } else {
    os << "bridges: (disconnected)\n";
  }

  const CostReport report = cost_report(s, params);
  os << "costs:\n";
  for (const PlayerCostRow& row : report.players)
    os << "  player " << row.player << ": building " << format_rat(row.building) << ", indirect "
       << row.indirect << ", total " << row.total << "\n";
  os << "social cost: " << report.social << "\n";
  const Optimum opt = optimum(params.n, params.alpha);
  os << "optimum: " << format_rat(opt.value) << " (" << optimum_shape(params.n, opt.witness)
     << ")\n";
  os << "ratio to optimum: " << cost_ratio_to_optimum(s, params) << "\n";
  return os.str();
}

Json check_json(EqConcept c, const CheckResult& r) {
  Json j{{"concept", concept_name(c)}, {"holds", r.holds}};
  j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  return j;
}

std::string check_text(EqConcept c, const CheckResult& r) {
  if (r.holds) return concept_name(c) + " holds\n";
  return concept_name(c) + " fails: " + r.witness->describe() + "\n";
}

namespace {

Json profile_entry(const StrategyProfile& s, FormationRule rule) {
  Json entry = Json::array();
  if (rule == FormationRule::Bilateral) {
    for (const Link& e : build_graph(s, rule).links()) entry.push_back(link_str(e));
  } else {
    for (const auto& [v, w] : request_list(s)) entry.push_back(arrow_str(v, w));
  }
  return entry;
}

void profile_line(std::ostream& os, const StrategyProfile& s, FormationRule rule) {
  if (rule == FormationRule::Bilateral) {
    os << "links";
    for (const Link& e : build_graph(s, rule).links()) os << ' ' << link_str(e);
  } else {
    os << "requests";
    for (const auto& [v, w] : request_list(s)) os << ' ' << arrow_str(v, w);
  }
}

}  // namespace

Json enumerate_json(const GameParams& params, EqConcept c,
                    const std::vector<StrategyProfile>& hits, bool count_only) {
  Json j{{"concept", concept_name(c)},
         {"params", params_json(params)},
         {"count", hits.size()}};
  if (!count_only) {
    Json list = Json::array();
    for (const StrategyProfile& s : hits) list.push_back(profile_entry(s, params.rule));
    j["equilibria"] = std::move(list);
  }
  return j;
}

std::string enumerate_text(const GameParams& params, EqConcept c,
                           const std::vector<StrategyProfile>& hits, bool count_only) {
  std::ostringstream os;
  os << "concept: " << concept_name(c) << "\n";
  os << "params: n=" << params.n << " alpha=" << format_rat(params.alpha)
     << " rule=" << rule_name(params.rule) << " adversary=" << adversary_name(params.adversary)
     << "\n";
  os << "count: " << hits.size() << "\n";
  if (!count_only) {
    for (std::size_t i = 0; i < hits.size(); ++i) {
      os << "equilibrium " << i + 1 << ": ";
      profile_line(os, hits[i], params.rule);
      os << "\n";
    }
  }
  return os.str();
}

Json poa_json(const std::vector<PoAReport>& rows) {
  Json sweep = Json::array();
  for (const PoAReport& r : rows) {
    Json row{{"alpha", format_rat(r.params.alpha)},
             {"count", r.count},
             {"optimum", format_rat(r.optimum)}};
    row["worst_social"] = r.worst_social ? Json(format_rat(*r.worst_social)) : Json(nullptr);
    row["ratio"] = r.ratio ? Json(format_rat(*r.ratio)) : Json(nullptr);
    if (r.witness) {
      Json links = Json::array();
      for (const Link& e : build_graph(*r.witness, r.params.rule).links())
        links.push_back(link_str(e));
      row["witness"] = std::move(links);
    } else {
      row["witness"] = nullptr;
    }
    sweep.push_back(std::move(row));
  }
  Json j;
  if (!rows.empty()) {
    j["concept"] = concept_name(rows.front().target);
    j["n"] = rows.front().params.n;
    j["rule"] = rule_name(rows.front().params.rule);
    j["adversary"] = adversary_name(rows.front().params.adversary);
  }
  j["sweep"] = std::move(sweep);
  return j;
}

std::string poa_text(const std::vector<PoAReport>& rows) {
  std::ostringstream os;
  if (!rows.empty())
    os << "poa for " << concept_name(rows.front().target) << ", n=" << rows.front().params.n
       << ", rule=" << rule_name(rows.front().params.rule)
       << ", adversary=" << adversary_name(rows.front().params.adversary) << "\n";
  for (const PoAReport& r : rows) {
    os << "alpha " << format_rat(r.params.alpha) << ": count " << r.count << ", optimum "
       << format_rat(r.optimum);
    if (r.ratio) {
      os << ", worst " << format_rat(*r.worst_social) << ", ratio " << format_rat(*r.ratio)
         << "\n";
      os << "  witness: "
         << joined_links(build_graph(*r.witness, r.params.rule).links()) << "\n";
    } else {
      os << ", no equilibrium\n";
    }
  }
  return os.str();
}

std::string poa_csv(const std::vector<PoAReport>& rows) {
  std::ostringstream os;
  os << "alpha,count,optimum,worst_social,ratio,witness\n";
  for (const PoAReport& r : rows) {
    os << format_rat(r.params.alpha) << ',' << r.count << ',' << format_rat(r.optimum) << ',';
    if (r.ratio) {
      os << format_rat(*r.worst_social) << ',' << format_rat(*r.ratio) << ','
         << joined_links(build_graph(*r.witness, r.params.rule).links());
    } else {
      os << ",,";
    }
    os << "\n";
  }
  return os.str();
}

Json dynamics_json(const GameParams& params, const DynamicsResult& r) {
  Json steps = Json::array();
  for (const DynamicsMove& mv : r.trajectory) {
    Json step{{"move", mv.removal ? "cut" : "add"}, {"link", link_str(mv.link)}};
    if (mv.removal) step["seller"] = mv.seller;
    steps.push_back(std::move(step));
  }
  Json final_links = Json::array();
  for (const Link& e : r.final_graph.links()) final_links.push_back(link_str(e));
  return Json{{"params", params_json(params)},
              {"trajectory", std::move(steps)},
              {"steps", r.trajectory.size()},
              {"stable", r.stable},
              {"final", Json{{"n", r.final_graph.n()},
                             {"m", r.final_graph.m()},
                             {"links", std::move(final_links)}}}};
}

std::string dynamics_text(const GameParams& params, const DynamicsResult& r) {
  std::ostringstream os;
  os << "dynamics: n=" << params.n << " alpha=" << format_rat(params.alpha)
     << " adversary=" << adversary_name(params.adversary) << "\n";
  for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
    const DynamicsMove& mv = r.trajectory[i];
    os << "step " << i + 1 << ": " << (mv.removal ? "cut " : "add ") << link_str(mv.link);
    if (mv.removal) os << " (seller " << mv.seller << ")";
    os << "\n";
  }
  os << "steps: " << r.trajectory.size() << "\n";
  os << "stable: " << (r.stable ? "yes" : "no") << "\n";
  os << "final links: " << joined_links(r.final_graph.links()) << "\n";
  return os.str();
}

}  // namespace anarchy::cli
