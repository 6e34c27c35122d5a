#include "anarchy/cost.hpp"

#include <stdexcept>

#include "scratch.hpp"

namespace anarchy {

ExtRat indirect_cost(const Graph& g, PlayerId v, const LinkDistribution& dist) {
  g.check_player(v);
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  if (!scr.connected) return ExtRat::infinity();
  Rat expected = 0;
  for (const detail::BridgeEdge& b : scr.bridges) {
    const Link e = b.parent < b.child ? Link{b.parent, b.child} : Link{b.child, b.parent};
    const Rat p = dist.at(e);
    if (p != 0) expected += Rat(scr.rel(b, v)) * p;
  }
  return ExtRat(expected);
}

ExtRat player_cost(const StrategyProfile& s, PlayerId v, const GameParams& params) {
  validate_params(params);
  if (s.n() != params.n) throw std::invalid_argument("profile size does not match params");
  const Rat building = Rat(s.request_count(v)) * params.alpha;
  const Graph g = build_graph(s, params.rule);
  if (!g.connected()) return ExtRat::infinity();
  return ExtRat(building) + indirect_cost(g, v, distribution(g, params.adversary));
}

ExtRat social_cost(const StrategyProfile& s, const GameParams& params) {
  validate_params(params);
  if (s.n() != params.n) throw std::invalid_argument("profile size does not match params");
  long long requests = 0;
  for (PlayerId v = 1; v <= s.n(); ++v) requests += s.request_count(v);
  const Graph g = build_graph(s, params.rule);
  if (!g.connected()) return ExtRat::infinity();
  // sum of indirect costs = sum over links of sep(e) * Pr{e}
  const LinkDistribution dist = distribution(g, params.adversary);
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  Rat separation_term = 0;
  for (const detail::BridgeEdge& b : scr.bridges) {
    const Link e = b.parent < b.child ? Link{b.parent, b.child} : Link{b.child, b.parent};
    const Rat p = dist.at(e);
    if (p != 0) separation_term += Rat(2 * b.size * (scr.n - b.size)) * p;
  }
  return ExtRat(Rat(requests) * params.alpha + separation_term);
}

CostReport cost_report(const StrategyProfile& s, const GameParams& params) {
  validate_params(params);
  if (s.n() != params.n) throw std::invalid_argument("profile size does not match params");
  CostReport report;
  const Graph g = build_graph(s, params.rule);
  report.m = g.m();
  const bool connected = g.connected();
  LinkDistribution dist;
  if (connected) dist = distribution(g, params.adversary);
  ExtRat social(0);
  for (PlayerId v = 1; v <= s.n(); ++v) {
    PlayerCostRow row;
    row.player = v;
    row.building = Rat(s.request_count(v)) * params.alpha;
    row.indirect = connected ? indirect_cost(g, v, dist) : ExtRat::infinity();
    row.total = ExtRat(row.building) + row.indirect;
    social += row.total;
    report.players.push_back(row);
  }
  report.social = social;
  return report;
}

Optimum optimum(int n, const Rat& alpha) {
  if (n < 3) throw std::invalid_argument("the game needs at least 3 players");
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  const Rat cycle_cost = Rat(2 * n) * alpha;
  const Rat star_cost = Rat(2 * (n - 1)) * (alpha + 1);
  std::vector<Link> links;
  if (cycle_cost <= star_cost) {
    for (int v = 1; v < n; ++v) links.push_back(Link{v, v + 1});
    links.push_back(Link{1, n});
    return Optimum{cycle_cost, Graph(n, links)};
  }
  for (int v = 2; v <= n; ++v) links.push_back(Link{1, v});
  return Optimum{star_cost, Graph(n, links)};
}

Rat opt_lower_bound(int n, const Rat& alpha) { return optimum(n, alpha).value; }

ExtRat cost_ratio_to_optimum(const StrategyProfile& s, const GameParams& params) {
  const ExtRat sc = social_cost(s, params);
  if (sc.is_infinite()) return ExtRat::infinity();
  return ExtRat(sc.finite() / optimum(params.n, params.alpha).value);
}

}  // namespace anarchy
