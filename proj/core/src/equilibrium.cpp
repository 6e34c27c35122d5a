#include "anarchy/equilibrium.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "anarchy/cost.hpp"
#include "anarchy/enumerate.hpp"
#include "scratch.hpp"

namespace anarchy {
namespace {

constexpr int kRowSearchCap = 12;  // row replacement is 2^(n-1) per player
constexpr int kDropDegreeCap = 20;
constexpr int kBilateralEnumCap = 8;
constexpr int kUnilateralEnumCap = 7;
// Work is split into a fixed number of chunks merged in order, so results
// never depend on how many workers ran.
constexpr int kEnumChunks = 256;

void require_builtin(const GameParams& params, const char* what) {
  if (std::holds_alternative<CustomTable>(params.adversary))
    throw std::invalid_argument(std::string(what) +
                                ": a custom table prices one fixed graph, so deviation "
                                "costs are undefined under it");
}

FormationRule rule_of(EqConcept c) {
  return (c == EqConcept::NeUlf || c == EqConcept::MaxNeUlf) ? FormationRule::Unilateral
                                                             : FormationRule::Bilateral;
}

// Cost evaluation over a mutable link set: flip links, rescan, read costs.
// One scan serves every player, since indirect cost only needs the bridges.
class CostScan {
 public:
  void init(const Graph& g, const GameParams& params) {
    scr_.load(g);
    alpha_ = params.alpha;
    simple_ = !std::holds_alternative<Smart>(params.adversary);
    rescan();
  }

  void flip(PlayerId v, PlayerId w) { scr_.flip(v, w); }

  void rescan() {
    scr_.scan();
    smart_ready_ = false;
  }

  bool connected() const { return scr_.connected; }

  int degree(PlayerId v) const {
    const std::uint64_t* row = scr_.bits.data() + static_cast<std::size_t>(v) * scr_.words;
    int d = 0;
    for (int w = 0; w < scr_.words; ++w) d += std::popcount(row[w]);
    return d;
  }

  ExtRat indirect(PlayerId v) {
    if (!scr_.connected) return ExtRat::infinity();
    if (simple_) return Rat(scr_.rel_sum(v), scr_.m);
    ensure_smart();
    if (targets_.empty()) return ExtRat();  // bridgeless, every attack is harmless
    long long sum = 0;
    for (int i : targets_) sum += scr_.rel(scr_.bridges[i], v);
    return Rat(sum, static_cast<long long>(targets_.size()));
  }

  ExtRat total(PlayerId v, long long requests) {
    ExtRat c{Rat(requests) * alpha_};
    c += indirect(v);
    return c;
  }

  detail::Scratch& scratch() { return scr_; }

 private:
  void ensure_smart() {
    if (smart_ready_) return;
    targets_.clear();
    long long best = -1;
    for (std::size_t i = 0; i < scr_.bridges.size(); ++i) {
      const long long sep = 2 * scr_.bridges[i].size * (scr_.n - scr_.bridges[i].size);
      if (sep > best) {
        best = sep;
        targets_.clear();
      }
      if (sep == best) targets_.push_back(static_cast<int>(i));
    }
    smart_ready_ = true;
  }

  detail::Scratch scr_;
  Rat alpha_;
  bool simple_ = true;
  bool smart_ready_ = false;
  std::vector<int> targets_;  // bridges of maximal separation
};

Graph graph_of(const detail::Scratch& scr) {
  std::vector<Link> links;
  for (PlayerId v = 1; v <= scr.n; ++v) {
    const std::uint64_t* row = scr.bits.data() + static_cast<std::size_t>(v) * scr.words;
    for (PlayerId w = v + 1; w <= scr.n; ++w)
      if (row[w >> 6] >> (w & 63) & 1) links.push_back(Link{v, w});
  }
  return Graph(scr.n, links);
}

void check_profile_args(const StrategyProfile& s, const GameParams& params, const char* what) {
  validate_params(params);
  require_builtin(params, what);
  if (s.n() != params.n)
    throw std::invalid_argument(std::string(what) + ": profile size does not match params.n");
}

std::vector<Link> bit_links(PlayerId v, const std::vector<PlayerId>& partners,
                            std::uint64_t mask) {
  std::vector<Link> out;
  for (std::size_t i = 0; i < partners.size(); ++i)
    if (mask >> i & 1) out.push_back(make_link(v, partners[i]));
  return out;
}

}  // namespace

std::string concept_name(EqConcept c) {
  switch (c) {
    case EqConcept::NeUlf: return "ne";
    case EqConcept::MaxNeUlf: return "maxne";
    case EqConcept::PneBlf: return "pne";
    case EqConcept::PsBlf: return "ps";
  }
  throw std::logic_error("unknown concept");
}

EqConcept concept_from_name(const std::string& name) {
  if (name == "ne") return EqConcept::NeUlf;
  if (name == "maxne") return EqConcept::MaxNeUlf;
  if (name == "pne") return EqConcept::PneBlf;
  if (name == "ps") return EqConcept::PsBlf;
  throw std::invalid_argument("unknown concept '" + name + "', expected ne, maxne, pne, or ps");
}

std::string DeviationWitness::describe() const {
  std::ostringstream os;
  auto list = [&] {
    os << "{";
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (i) os << ", ";
      os << links[i].a << "-" << links[i].b;
    }
    os << "}";
  };
  switch (kind) {
    case Kind::RowReplacement:
      os << "player " << player << " swaps its request row to ";
      list();
      os << ", cost " << cost_before << " -> " << cost_after;
      break;
    case Kind::AddRequests:
      os << "player " << player << " adds requests ";
      list();
      os << " and its cost " << cost_before << " -> " << cost_after
         << " fails to rise strictly";
      break;
    case Kind::DropLinks:
      os << "player " << player << " drops ";
      list();
      os << ", cost " << cost_before << " -> " << cost_after;
      break;
    case Kind::RemoveLink:
      os << "player " << player << " cuts ";
      list();
      os << ", cost " << cost_before << " -> " << cost_after;
      break;
    case Kind::AddLink:
      os << "players " << player << " and " << partner << " add ";
      list();
      os << ", costs " << cost_before << " -> " << cost_after << " and " << partner_before
         << " -> " << partner_after;
      break;
  }
  return os.str();
}

CheckResult is_nash_ulf(const StrategyProfile& s, const GameParams& params) {
  check_profile_args(s, params, "nash check");
  if (params.rule != FormationRule::Unilateral)
    throw std::invalid_argument("nash check: profile concepts use the unilateral rule; "
                                "bilateral stability goes through the graph checks");
  if (params.n > kRowSearchCap)
    throw std::invalid_argument("nash check: row search capped at n = 12");

  const int n = params.n;
  const Graph g = build_graph(s, FormationRule::Unilateral);
  CostScan cs;
  for (PlayerId v = 1; v <= n; ++v) {
    cs.init(g, params);
    const ExtRat current = cs.total(v, s.request_count(v));
    // Requests toward players already requesting v never change the graph, so
    // a best deviation avoids them; search rows inside the free set only.
    std::vector<PlayerId> free;
    for (PlayerId w = 1; w <= n; ++w)
      if (w != v && !s.requests(w, v)) free.push_back(w);
    std::uint64_t cur = 0;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (cs.scratch().has(v, free[i])) cur |= std::uint64_t{1} << i;
    const std::uint64_t space = std::uint64_t{1} << free.size();
    for (std::uint64_t x = 0; x < space; ++x) {
      std::uint64_t diff = x ^ cur;
      while (diff) {
        const int i = std::countr_zero(diff);
        diff &= diff - 1;
        cs.flip(v, free[i]);
      }
      cur = x;
      cs.rescan();
      const ExtRat cand = cs.total(v, std::popcount(x));
      if (cand < current) {
        DeviationWitness w;
        w.kind = DeviationWitness::Kind::RowReplacement;
        w.player = v;
        w.links = bit_links(v, free, x);
        w.cost_before = current;
        w.cost_after = cand;
        return {false, std::move(w)};
      }
    }
  }
  return {true, std::nullopt};
}

CheckResult is_max_ne_ulf(const StrategyProfile& s, const GameParams& params) {
  CheckResult ne = is_nash_ulf(s, params);
  if (!ne.holds) return ne;

  const int n = params.n;
  const Graph g = build_graph(s, FormationRule::Unilateral);
  CostScan cs;
  // Extra requests on present links pay alpha for an unchanged graph, so they
  // rise strictly on their own and a mixed set inherits the violation of its
  // absent part. Only sets of absent links need checking.
  for (PlayerId v = 1; v <= n; ++v) {
    cs.init(g, params);
    const long long base_requests = s.request_count(v);
    const ExtRat current = cs.total(v, base_requests);
    std::vector<PlayerId> absent;
    for (PlayerId w = 1; w <= n; ++w)
      if (w != v && !g.has_link(v, w)) absent.push_back(w);
    std::uint64_t cur = 0;
    const std::uint64_t space = std::uint64_t{1} << absent.size();
    for (std::uint64_t x = 1; x < space; ++x) {
      std::uint64_t diff = x ^ cur;
      while (diff) {
        const int i = std::countr_zero(diff);
        diff &= diff - 1;
        cs.flip(v, absent[i]);
      }
      cur = x;
      cs.rescan();
      const ExtRat cand = cs.total(v, base_requests + std::popcount(x));
      if (!(cand > current)) {
        DeviationWitness w;
        w.kind = DeviationWitness::Kind::AddRequests;
        w.player = v;
        w.links = bit_links(v, absent, x);
        w.cost_before = current;
        w.cost_after = cand;
        return {false, std::move(w)};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

void check_graph_args(const Graph& g, const GameParams& params, const char* what) {
  validate_params(params);
  require_builtin(params, what);
  if (g.n() != params.n)
    throw std::invalid_argument(std::string(what) + ": graph size does not match params.n");
  if (params.rule != FormationRule::Bilateral)
    throw std::invalid_argument(std::string(what) + ": graph concepts use the bilateral rule");
}

// A pair blocks when adding its link leaves neither endpoint worse off.
std::optional<DeviationWitness> blocking_addition(CostScan& cs, const GameParams& params,
                                                  const std::vector<ExtRat>& base,
                                                  const std::vector<int>& deg) {
  const int n = params.n;
  for (PlayerId a = 1; a <= n; ++a)
    for (PlayerId b = a + 1; b <= n; ++b) {
      if (cs.scratch().has(a, b)) continue;
      cs.flip(a, b);
      cs.rescan();
      const ExtRat ca = cs.total(a, deg[a] + 1);
      const ExtRat cb = cs.total(b, deg[b] + 1);
      cs.flip(a, b);
      if (ca <= base[a] && cb <= base[b]) {
        DeviationWitness w;
        w.kind = DeviationWitness::Kind::AddLink;
        w.player = a;
        w.partner = b;
        w.links = {Link{a, b}};
        w.cost_before = base[a];
        w.cost_after = ca;
        w.partner_before = base[b];
        w.partner_after = cb;
        return w;
      }
    }
  return std::nullopt;
}

void base_costs(CostScan& cs, int n, std::vector<ExtRat>& base, std::vector<int>& deg) {
  base.assign(n + 1, ExtRat());
  deg.assign(n + 1, 0);
  for (PlayerId v = 1; v <= n; ++v) {
    deg[v] = cs.degree(v);
    base[v] = cs.total(v, deg[v]);
  }
}

}  // namespace

CheckResult is_pne(const Graph& g, const GameParams& params) {
  check_graph_args(g, params, "pne check");
  const int n = params.n;
  for (PlayerId v = 1; v <= n; ++v)
    if (g.degree(v) > kDropDegreeCap)
      throw std::invalid_argument("pne check: drop search capped at degree 20");

  CostScan cs;
  cs.init(g, params);
  std::vector<ExtRat> base;
  std::vector<int> deg;
  base_costs(cs, n, base, deg);

  // Nash side. Requests beyond a player's neighborhood never build links, so
  // only dropped subsets of its own links can pay off.
  for (PlayerId v = 1; v <= n; ++v) {
    const std::vector<PlayerId> inc = g.neighbors(v);
    std::uint64_t cur = 0;  // dropped set
    const std::uint64_t space = std::uint64_t{1} << inc.size();
    for (std::uint64_t x = 1; x < space; ++x) {
      std::uint64_t diff = x ^ cur;
      while (diff) {
        const int i = std::countr_zero(diff);
        diff &= diff - 1;
        cs.flip(v, inc[i]);
      }
      cur = x;
      cs.rescan();
      const ExtRat cand = cs.total(v, deg[v] - std::popcount(x));
      if (cand < base[v]) {
        DeviationWitness w;
        w.kind = DeviationWitness::Kind::DropLinks;
        w.player = v;
        w.links = bit_links(v, inc, x);
        w.cost_before = base[v];
        w.cost_after = cand;
        return {false, std::move(w)};
      }
    }
    std::uint64_t diff = cur;
    while (diff) {
      const int i = std::countr_zero(diff);
      diff &= diff - 1;
      cs.flip(v, inc[i]);
    }
  }

  if (auto w = blocking_addition(cs, params, base, deg)) return {false, std::move(w)};
  return {true, std::nullopt};
}

CheckResult is_pairwise_stable(const Graph& g, const GameParams& params) {
  check_graph_args(g, params, "stability check");
  const int n = params.n;

  CostScan cs;
  cs.init(g, params);
  std::vector<ExtRat> base;
  std::vector<int> deg;
  base_costs(cs, n, base, deg);

  for (const Link& e : g.links()) {
    cs.flip(e.a, e.b);
    cs.rescan();
    const ExtRat ca = cs.total(e.a, deg[e.a] - 1);
    const ExtRat cb = cs.total(e.b, deg[e.b] - 1);
    cs.flip(e.a, e.b);
    const bool a_gains = ca < base[e.a];
    if (a_gains || cb < base[e.b]) {
      DeviationWitness w;
      w.kind = DeviationWitness::Kind::RemoveLink;
      w.player = a_gains ? e.a : e.b;
      w.links = {e};
      w.cost_before = a_gains ? base[e.a] : base[e.b];
      w.cost_after = a_gains ? ca : cb;
      return {false, std::move(w)};
    }
  }

  if (auto w = blocking_addition(cs, params, base, deg)) return {false, std::move(w)};
  return {true, std::nullopt};
}

bool convexity_holds(const StrategyProfile& s, PlayerId v,
                     const std::vector<PlayerId>& removals, const GameParams& params) {
  check_profile_args(s, params, "convexity check");
  const Graph g = build_graph(s, params.rule);
  g.check_player(v);
  if (removals.empty())
    throw std::invalid_argument("convexity check: need at least one removal target");
  std::vector<PlayerId> sorted = removals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("convexity check: duplicate removal target");
  for (PlayerId w : removals)
    if (!g.has_link(v, w))
      throw std::invalid_argument("convexity check: removal target is not a built link");

  CostScan cs;
  cs.init(g, params);
  const ExtRat base = cs.indirect(v);

  ExtRat rhs;
  for (PlayerId w : removals) {
    cs.flip(v, w);
    cs.rescan();
    rhs += cs.indirect(v);
    cs.flip(v, w);
  }

  for (PlayerId w : removals) cs.flip(v, w);
  cs.rescan();
  ExtRat lhs = cs.indirect(v);
  for (std::size_t i = 1; i < removals.size(); ++i) lhs += base;

  return lhs >= rhs;
}

namespace {

// One fold state per chunk, chunks claimed by a shared counter, merged in
// chunk order afterwards.
template <class State, class Visit>
std::vector<State> run_chunked(std::uint64_t total, int threads, Visit&& visit) {
  const int chunks = static_cast<int>(std::min<std::uint64_t>(kEnumChunks, total));
  std::vector<State> states(chunks);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t lo = total * c / chunks;
      const std::uint64_t hi = total * (c + 1) / chunks;
      for (std::uint64_t i = lo; i < hi; ++i) visit(states[c], i);
    }
  };
  const int workers = std::max(1, std::min(threads, chunks));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return states;
}

// For a fixed graph, whether a player's unilateral conditions hold depends
// only on which of its incident links it owns; the orientation of every other
// link enters neither its cost nor its alternatives. Build one table per
// player over its ownership subsets, then walk orientations against the
// tables, checking each player as soon as its last incident link is assigned.
struct UlfGraphScan {
  const Graph& g;
  const GameParams& params;
  bool maximal;

  std::vector<std::vector<PlayerId>> inc;  // incident partners, ascending
  std::vector<std::vector<char>> ok;       // ok[v][owned mask]

  UlfGraphScan(const Graph& graph, const GameParams& p, bool max_concept)
      : g(graph), params(p), maximal(max_concept) {}

  void build_tables() {
    const int n = g.n();
    inc.assign(n + 1, {});
    ok.assign(n + 1, {});
    CostScan cs;
    cs.init(g, params);
    for (PlayerId v = 1; v <= n; ++v) {
      inc[v] = g.neighbors(v);
      const int d = static_cast<int>(inc[v].size());
      std::vector<PlayerId> absent;
      for (PlayerId w = 1; w <= n; ++w)
        if (w != v && !g.has_link(v, w)) absent.push_back(w);

      const ExtRat base_indirect = cs.indirect(v);
      bool add_ok = true;
      if (maximal) {
        // Whether extra requests strictly hurt does not depend on the owned
        // set: the owned building cost appears on both sides and cancels.
        std::uint64_t cur = 0;
        const std::uint64_t space = std::uint64_t{1} << absent.size();
        for (std::uint64_t x = 1; x < space && add_ok; ++x) {
          std::uint64_t diff = x ^ cur;
          while (diff) {
            const int i = std::countr_zero(diff);
            diff &= diff - 1;
            cs.flip(v, absent[i]);
          }
          cur = x;
          cs.rescan();
          ExtRat added{Rat(std::popcount(x)) * params.alpha};
          added += cs.indirect(v);
          if (!(added > base_indirect)) add_ok = false;
        }
        std::uint64_t diff = cur;
        while (diff) {
          const int i = std::countr_zero(diff);
          diff &= diff - 1;
          cs.flip(v, absent[i]);
        }
        cs.rescan();
      }

      // free candidates for a replacement row: owned links first, then the
      // absent partners, so "state == g" is always the low |owned| bits.
      ok[v].assign(std::size_t{1} << d, 0);
      for (std::uint64_t owned = 0; owned < (std::uint64_t{1} << d); ++owned) {
        if (!add_ok) continue;  // maximality already failed for v
        std::vector<PlayerId> free;
        for (int i = 0; i < d; ++i)
          if (owned >> i & 1) free.push_back(inc[v][i]);
        const std::uint64_t owned_in_free = (std::uint64_t{1} << std::popcount(owned)) - 1;
        free.insert(free.end(), absent.begin(), absent.end());

        const ExtRat current = cs.total(v, std::popcount(owned));
        bool good = true;
        std::uint64_t cur = owned_in_free;  // scratch holds g right now
        const std::uint64_t space = std::uint64_t{1} << free.size();
        for (std::uint64_t x = 0; x < space && good; ++x) {
          std::uint64_t diff = x ^ cur;
          while (diff) {
            const int i = std::countr_zero(diff);
            diff &= diff - 1;
            cs.flip(v, free[i]);
          }
          cur = x;
          cs.rescan();
          if (cs.total(v, std::popcount(x)) < current) good = false;
        }
        std::uint64_t diff = cur ^ owned_in_free;
        while (diff) {
          const int i = std::countr_zero(diff);
          diff &= diff - 1;
          cs.flip(v, free[i]);
        }
        cs.rescan();
        ok[v][owned] = good;
      }
    }
  }

  template <class Hit>
  void emit(Hit&& hit) {
    const std::vector<Link> links = g.links();
    const int m = static_cast<int>(links.size());
    const int n = g.n();
    // last_of[i] lists players whose final incident link is links[i]
    std::vector<std::vector<PlayerId>> last_of(m);
    std::vector<int> last(n + 1, -1);
    for (int i = 0; i < m; ++i) {
      last[links[i].a] = i;
      last[links[i].b] = i;
    }
    for (PlayerId v = 1; v <= n; ++v) last_of[last[v]].push_back(v);
    std::vector<int> slot_a(m), slot_b(m);  // index of links[i] in inc[endpoint]
    for (int i = 0; i < m; ++i) {
      const auto& ia = inc[links[i].a];
      const auto& ib = inc[links[i].b];
      slot_a[i] = static_cast<int>(std::lower_bound(ia.begin(), ia.end(), links[i].b) - ia.begin());
      slot_b[i] = static_cast<int>(std::lower_bound(ib.begin(), ib.end(), links[i].a) - ib.begin());
    }

    std::vector<std::uint64_t> owned(n + 1, 0);
    std::vector<PlayerId> owner(m, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == m) {
        StrategyProfile s(n);
        for (int j = 0; j < m; ++j) {
          const PlayerId o = owner[j];
          const PlayerId t = o == links[j].a ? links[j].b : links[j].a;
          s = s.with_request(o, t, true);
        }
        hit(s);
        return;
      }
      for (int side = 0; side < 2; ++side) {
        const PlayerId o = side == 0 ? links[i].a : links[i].b;
        const int slot = side == 0 ? slot_a[i] : slot_b[i];
        owner[i] = o;
        owned[o] |= std::uint64_t{1} << slot;
        bool viable = true;
        for (PlayerId v : last_of[i])
          if (!ok[v][owned[v]]) viable = false;
        if (viable) self(self, i + 1);
        owned[o] &= ~(std::uint64_t{1} << slot);
      }
    };
    rec(rec, 0);
  }
};

struct EnumSpace {
  std::uint64_t total = 0;
  const std::vector<std::uint64_t>* reps = nullptr;  // dedup path only
};

EnumSpace check_enum_args(const GameParams& params, EqConcept c, const EnumOptions& options) {
  validate_params(params);
  require_builtin(params, "enumeration");
  if (params.rule != rule_of(c))
    throw std::invalid_argument("enumeration: params.rule does not match the rule of '" +
                                concept_name(c) + "'");
  const bool bilateral = rule_of(c) == FormationRule::Bilateral;
  if (bilateral && params.n > kBilateralEnumCap)
    throw std::invalid_argument("enumeration: bilateral concepts capped at n = 8");
  if (!bilateral && params.n > kUnilateralEnumCap)
    throw std::invalid_argument("enumeration: unilateral concepts capped at n = 7");
  if (options.dedup_isomorphic) {
    if (!bilateral)
      throw std::invalid_argument("enumeration: isomorphism dedup covers the bilateral "
                                  "concepts only");
    if (!options.connected_only)
      throw std::invalid_argument("enumeration: isomorphism dedup requires connected_only");
  }

  EnumSpace space;
  if (options.dedup_isomorphic) {
    space.reps = &connected_class_reps(params.n);
    space.total = space.reps->size();
  } else {
    const int pairs = params.n * (params.n - 1) / 2;
    space.total = std::uint64_t{1} << pairs;
  }
  return space;
}

// Calls hit() for every equilibrium whose candidate lives at this index.
template <class Hit>
void visit_candidate(std::uint64_t index, const GameParams& params, EqConcept c,
                     const EnumOptions& options, const EnumSpace& space, Hit&& hit) {
  const int n = params.n;
  if (rule_of(c) == FormationRule::Bilateral) {
    std::uint64_t mask = index;
    if (space.reps) {
      mask = (*space.reps)[index];
    } else if (options.connected_only && !mask_connected(n, mask)) {
      return;
    }
    const Graph g = graph_from_mask(n, mask);
    const bool holds = c == EqConcept::PneBlf ? is_pne(g, params).holds
                                              : is_pairwise_stable(g, params).holds;
    if (holds) hit(canonical_blf_profile(g));
    return;
  }
  // Unilateral. A disconnected build is never stable: any player can buy a
  // full request row, which connects everything at finite cost while its
  // current cost is infinite. Reciprocated pairs on a connected build are
  // never stable either (dropping the redundant request saves alpha), so
  // orientations of connected graphs cover every candidate.
  if (!mask_connected(n, index)) return;
  const Graph g = graph_from_mask(n, index);
  UlfGraphScan scan(g, params, c == EqConcept::MaxNeUlf);
  scan.build_tables();
  scan.emit(hit);
}

}  // namespace

std::vector<StrategyProfile> enumerate_equilibria(const GameParams& params, EqConcept c,
                                                  const EnumOptions& options) {
  const EnumSpace space = check_enum_args(params, c, options);
  auto states = run_chunked<std::vector<StrategyProfile>>(
      space.total, resolve_threads(options.threads),
      [&](std::vector<StrategyProfile>& state, std::uint64_t i) {
        visit_candidate(i, params, c, options, space,
                        [&](const StrategyProfile& s) { state.push_back(s); });
      });
  std::vector<StrategyProfile> out;
  for (auto& chunk : states)
    for (auto& s : chunk) out.push_back(std::move(s));
  return out;
}

PoAReport price_of_anarchy(const GameParams& params, EqConcept c, const EnumOptions& options) {
  const EnumSpace space = check_enum_args(params, c, options);
  struct Local {
    long long count = 0;
    std::optional<Rat> worst;
    std::optional<StrategyProfile> witness;
  };
  auto states = run_chunked<Local>(
      space.total, resolve_threads(options.threads), [&](Local& state, std::uint64_t i) {
        visit_candidate(i, params, c, options, space, [&](const StrategyProfile& s) {
          ++state.count;
          // equilibria build connected graphs, so social cost is finite
          Rat sc = social_cost(s, params).finite();
          if (!state.worst || sc > *state.worst) {
            state.worst = std::move(sc);
            state.witness = s;
          }
        });
      });

  PoAReport report;
  report.params = params;
  report.target = c;
  report.optimum = optimum(params.n, params.alpha).value;
  for (auto& state : states) {
    report.count += state.count;
    if (state.worst && (!report.worst_social || *state.worst > *report.worst_social)) {
      report.worst_social = std::move(state.worst);
      report.witness = std::move(state.witness);
    }
  }
  if (report.worst_social) report.ratio = *report.worst_social / report.optimum;
  return report;
}

DynamicsResult pairwise_dynamics(const Graph& start, const GameParams& params,
                                 DynamicsPolicy policy, std::uint64_t seed, int max_steps) {
  check_graph_args(start, params, "dynamics");
  if (!start.connected())
    throw std::invalid_argument("dynamics: start graph must be connected");
  if (max_steps < 0) throw std::invalid_argument("dynamics: max_steps must be >= 0");

  const int n = params.n;
  CostScan cs;
  cs.init(start, params);
  std::mt19937_64 rng(seed);

  std::vector<DynamicsMove> trajectory;
  bool stable = false;
  std::vector<ExtRat> base;
  std::vector<int> deg;
  std::vector<DynamicsMove> moves;

  while (static_cast<int>(trajectory.size()) < max_steps) {
    cs.rescan();
    if (!cs.connected()) throw std::logic_error("dynamics: connectivity invariant broken");
    base_costs(cs, n, base, deg);
    moves.clear();
    const bool gather = policy == DynamicsPolicy::SeededRandom;
    std::optional<DynamicsMove> pick;

    // Removals first: a cut must strictly help its seller. It then cannot
    // disconnect the graph, since that would price the seller at infinity.
    for (PlayerId a = 1; a <= n && !pick; ++a) {
      for (PlayerId b = a + 1; b <= n && !pick; ++b) {
        if (!cs.scratch().has(a, b)) continue;
        cs.flip(a, b);
        cs.rescan();
        const ExtRat ca = cs.total(a, deg[a] - 1);
        const ExtRat cb = cs.total(b, deg[b] - 1);
        cs.flip(a, b);
        if (ca < base[a]) {
          DynamicsMove mv{true, Link{a, b}, a};
          if (gather) moves.push_back(mv); else pick = mv;
        }
        if (!pick && cb < base[b]) {
          DynamicsMove mv{true, Link{a, b}, b};
          if (gather) moves.push_back(mv); else pick = mv;
        }
      }
    }
    // Additions: both endpoints must weakly gain.
    for (PlayerId a = 1; a <= n && !pick; ++a) {
      for (PlayerId b = a + 1; b <= n && !pick; ++b) {
        if (cs.scratch().has(a, b)) continue;
        cs.flip(a, b);
        cs.rescan();
        const ExtRat ca = cs.total(a, deg[a] + 1);
        const ExtRat cb = cs.total(b, deg[b] + 1);
        cs.flip(a, b);
        if (ca <= base[a] && cb <= base[b]) {
          DynamicsMove mv{false, Link{a, b}, 0};
          if (gather) moves.push_back(mv); else pick = mv;
        }
      }
    }

    if (gather && !moves.empty()) {
      std::uniform_int_distribution<std::size_t> d(0, moves.size() - 1);
      pick = moves[d(rng)];
    }
    if (!pick) {
      stable = true;
      break;
    }
    cs.flip(pick->link.a, pick->link.b);
    trajectory.push_back(*pick);
  }

  return {std::move(trajectory), graph_of(cs.scratch()), stable};
}

}  // namespace anarchy
