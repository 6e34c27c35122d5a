#include "anarchy/adversary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "scratch.hpp"

namespace anarchy {

const char* adversary_name(const AdversaryKind& kind) {
  if (std::holds_alternative<SimpleMinded>(kind)) return "simple";
  if (std::holds_alternative<Smart>(kind)) return "smart";
  return "custom";
}

CriticalLinks critical_links(const Graph& g) {
  if (g.m() == 0) throw std::invalid_argument("graph has no links");
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  if (!scr.connected) throw std::invalid_argument("graph is disconnected");

  long long sep_max = 0;
  for (const detail::BridgeEdge& b : scr.bridges) {
    sep_max = std::max(sep_max, 2 * b.size * (scr.n - b.size));
  }
  CriticalLinks out;
  out.sep_max = sep_max;
  if (sep_max == 0) {
    out.links = g.links();  // bridgeless: every link ties at separation 0
    return out;
  }
  for (const detail::BridgeEdge& b : scr.bridges) {
    if (2 * b.size * (scr.n - b.size) == sep_max) {
      out.links.push_back(b.parent < b.child ? Link{b.parent, b.child}
                                             : Link{b.child, b.parent});
    }
  }
  std::sort(out.links.begin(), out.links.end());
  return out;
}

LinkDistribution distribution(const Graph& g, const AdversaryKind& kind) {
  if (g.m() == 0) throw std::invalid_argument("graph has no links");
  LinkDistribution d;
  if (const auto* custom = std::get_if<CustomTable>(&kind)) {
    Rat sum = 0;
    for (const auto& [e, p] : custom->prob) {
      if (!g.has_link(e.a, e.b)) {
        throw std::invalid_argument("table names a link not in the graph: " +
                                    std::to_string(e.a) + "-" + std::to_string(e.b));
      }
      if (p < 0) throw std::invalid_argument("negative probability");
      sum += p;
      if (p > 0) d.prob[e] = p;
    }
    if (sum != 1) {
      throw std::invalid_argument("probabilities sum to " + format_rat(sum) +
                                  ", expected 1");
    }
    return d;
  }
  if (std::holds_alternative<SimpleMinded>(kind)) {
    const Rat each(1, g.m());
    for (const Link& e : g.links()) d.prob[e] = each;
    return d;
  }
  // smart: uniform over the separation maximizers
  const CriticalLinks crit = critical_links(g);
  const Rat each(1, static_cast<long long>(crit.links.size()));
  for (const Link& e : crit.links) d.prob[e] = each;
  return d;
}

}  // namespace anarchy
