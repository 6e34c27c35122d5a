#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <anarchy/enumerate.hpp>
#include <anarchy/equilibrium.hpp>
#include <anarchy/fixtures.hpp>
#include <oracles.hpp>

using namespace anarchy;

namespace {

GameParams blf(int n, Rat alpha, AdversaryKind kind = SimpleMinded{}) {
  return GameParams{.n = n, .alpha = std::move(alpha), .rule = FormationRule::Bilateral,
                    .adversary = std::move(kind)};
}

GameParams ulf(int n, Rat alpha, AdversaryKind kind = SimpleMinded{}) {
  return GameParams{.n = n, .alpha = std::move(alpha), .rule = FormationRule::Unilateral,
                    .adversary = std::move(kind)};
}

// v's row swapped for the given target set, everything else untouched.
StrategyProfile with_row(const StrategyProfile& s, PlayerId v,
                         const std::vector<PlayerId>& targets) {
  StrategyProfile out = s;
  for (PlayerId w = 1; w <= s.n(); ++w) {
    if (w != v && out.requests(v, w)) out = out.with_request(v, w, false);
  }
  for (PlayerId w : targets) out = out.with_request(v, w, true);
  return out;
}

std::vector<PlayerId> others(int n, PlayerId v) {
  std::vector<PlayerId> out;
  for (PlayerId w = 1; w <= n; ++w) {
    if (w != v) out.push_back(w);
  }
  return out;
}

// Nash by definition: no full row replacement strictly improves anyone.
bool oracle_nash(const StrategyProfile& s, const GameParams& params) {
  for (PlayerId v = 1; v <= s.n(); ++v) {
    const ExtRat base = oracle::player_cost(s, v, params);
    const auto rest = others(s.n(), v);
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
      std::vector<PlayerId> row;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) row.push_back(rest[i]);
      }
      if (oracle::player_cost(with_row(s, v, row), v, params) < base) return false;
    }
  }
  return true;
}

// Maximal Nash by definition: Nash, and every strict superset of a row is
// strictly worse for its owner.
bool oracle_max_nash(const StrategyProfile& s, const GameParams& params) {
  if (!oracle_nash(s, params)) return false;
  for (PlayerId v = 1; v <= s.n(); ++v) {
    const ExtRat base = oracle::player_cost(s, v, params);
    std::vector<PlayerId> missing;
    for (PlayerId w : others(s.n(), v)) {
      if (!s.requests(v, w)) missing.push_back(w);
    }
    for (unsigned mask = 1; mask < (1u << missing.size()); ++mask) {
      StrategyProfile t = s;
      for (std::size_t i = 0; i < missing.size(); ++i) {
        if (mask >> i & 1) t = t.with_request(v, missing[i], true);
      }
      if (!(oracle::player_cost(t, v, params) > base)) return false;
    }
  }
  return true;
}

bool oracle_pne(const Graph& g, const GameParams& params) {
  const StrategyProfile s = canonical_blf_profile(g);
  if (!oracle_nash(s, params)) return false;
  // joint additions: both buyers weakly gain
  for (PlayerId v = 1; v <= g.n(); ++v) {
    for (PlayerId w = v + 1; w <= g.n(); ++w) {
      if (g.has_link(v, w)) continue;
      const StrategyProfile t =
          s.with_request(v, w, true).with_request(w, v, true);
      if (oracle::player_cost(t, v, params) <= oracle::player_cost(s, v, params) &&
          oracle::player_cost(t, w, params) <= oracle::player_cost(s, w, params)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<PlayerId, PlayerId>> request_list(const StrategyProfile& s) {
  std::vector<std::pair<PlayerId, PlayerId>> out;
  for (PlayerId v = 1; v <= s.n(); ++v) {
    for (PlayerId w = 1; w <= s.n(); ++w) {
      if (s.requests(v, w)) out.emplace_back(v, w);
    }
  }
  return out;
}

std::set<std::vector<std::pair<PlayerId, PlayerId>>> profile_set(
    const std::vector<StrategyProfile>& profiles) {
  std::set<std::vector<std::pair<PlayerId, PlayerId>>> out;
  for (const StrategyProfile& s : profiles) out.insert(request_list(s));
  return out;
}

// All 2^(n(n-1)) strategy profiles on n players; n = 4 keeps this at 4096.
void for_each_profile(int n, const std::function<void(const StrategyProfile&)>& fn) {
  std::vector<std::pair<PlayerId, PlayerId>> slots;
  for (PlayerId v = 1; v <= n; ++v) {
    for (PlayerId w = 1; w <= n; ++w) {
      if (v != w) slots.emplace_back(v, w);
    }
  }
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    StrategyProfile s(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) s = s.with_request(slots[i].first, slots[i].second, true);
    }
    fn(s);
  }
}

StrategyProfile random_profile(std::mt19937_64& rng, int n) {
  StrategyProfile s(n);
  for (PlayerId v = 1; v <= n; ++v) {
    for (PlayerId w = 1; w <= n; ++w) {
      if (v != w && rng() % 3 == 0) s = s.with_request(v, w, true);
    }
  }
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("equilibrium");

TEST_CASE("concept names round trip") {
  for (EqConcept c : {EqConcept::NeUlf, EqConcept::MaxNeUlf, EqConcept::PneBlf, EqConcept::PsBlf}) {
    CHECK(concept_from_name(concept_name(c)) == c);
  }
  CHECK(concept_name(EqConcept::PsBlf) == "ps");
  CHECK(concept_name(EqConcept::NeUlf) == "ne");
  CHECK_THROWS_AS(concept_from_name("nope"), std::invalid_argument);
}

TEST_CASE("known verdicts at small size") {
  CHECK(is_pairwise_stable(make_cycle(4), blf(4, Rat(1, 2))).holds);
  CHECK(is_pne(make_cycle(5), blf(5, Rat(2))).holds);
  CHECK(is_pne(make_star(5), blf(5, Rat(2))).holds);

  const CheckResult greedy = is_pairwise_stable(make_star(5), blf(5, Rat(1, 5)));
  CHECK(!greedy.holds);
  REQUIRE(greedy.witness.has_value());
  CHECK(greedy.witness->kind == DeviationWitness::Kind::AddLink);
  CHECK(greedy.witness->cost_after <= greedy.witness->cost_before);
  CHECK(greedy.witness->partner_after <= greedy.witness->partner_before);
  CHECK(!greedy.witness->describe().empty());

  const CheckResult path = is_pairwise_stable(Graph(4, {{1, 2}, {2, 3}, {3, 4}}),
                                              blf(4, Rat(1, 2)));
  CHECK(!path.holds);
  CHECK(path.witness->kind == DeviationWitness::Kind::AddLink);
  CHECK(path.witness->links == std::vector<Link>{{1, 3}});  // first blocking pair
}

TEST_CASE("a disconnected graph is never stable") {
  const Graph split(4, {{1, 2}, {3, 4}});
  CHECK(!is_pairwise_stable(split, blf(4, Rat(3))).holds);
  CHECK(!is_pne(split, blf(4, Rat(3))).holds);
  StrategyProfile s(4);  // empty: nothing built
  CHECK(!is_nash_ulf(s, ulf(4, Rat(3))).holds);
  CHECK(!is_max_ne_ulf(s, ulf(4, Rat(3))).holds);
}

TEST_CASE("directed cycle is Nash until cutting beats rerouting") {
  const StrategyProfile dc = make_directed_cycle_profile(9);
  CHECK(is_nash_ulf(dc, ulf(9, Rat(2))).holds);
  CHECK(is_nash_ulf(dc, ulf(9, Rat(9, 2))).holds);  // exactly at the break-even point
  const CheckResult broken = is_nash_ulf(dc, ulf(9, Rat(5)));
  CHECK(!broken.holds);
  REQUIRE(broken.witness.has_value());
  CHECK(broken.witness->kind == DeviationWitness::Kind::RowReplacement);
  CHECK(broken.witness->cost_after < broken.witness->cost_before);
  CHECK(is_max_ne_ulf(dc, ulf(9, Rat(2))).holds);
}

TEST_CASE("outward star is Nash and maximal") {
  const StrategyProfile star = make_star_outward_profile(9);
  CHECK(is_nash_ulf(star, ulf(9, Rat(10))).holds);
  CHECK(is_max_ne_ulf(star, ulf(9, Rat(15, 8))).holds);
  CHECK(is_max_ne_ulf(star, ulf(9, Rat(10))).holds);
  CHECK(oracle_max_nash(star, ulf(9, Rat(15, 8))));
}

TEST_CASE("unilateral checks match brute force on every n=4 profile") {
  const GameParams params = ulf(4, Rat(2, 3));
  for_each_profile(4, [&](const StrategyProfile& s) {
    const bool ne = oracle_nash(s, params);
    CHECK(is_nash_ulf(s, params).holds == ne);
    if (ne) CHECK(is_max_ne_ulf(s, params).holds == oracle_max_nash(s, params));
  });
}

TEST_CASE("unilateral checks match brute force on random n=5 profiles") {
  std::mt19937_64 rng(90101);
  const GameParams params = ulf(5, Rat(3, 2), Smart{});
  for (int trial = 0; trial < 300; ++trial) {
    const StrategyProfile s = random_profile(rng, 5);
    CHECK(is_nash_ulf(s, params).holds == oracle_nash(s, params));
    CHECK(is_max_ne_ulf(s, params).holds == oracle_max_nash(s, params));
  }
}

TEST_CASE("bilateral checks match brute force exhaustively") {
  for (const GameParams& params :
       {blf(4, Rat(1, 4)), blf(4, Rat(3)), blf(4, Rat(1), Smart{}),
        blf(5, Rat(1, 4)), blf(5, Rat(3), Smart{})}) {
    long long stable_count = 0;
    oracle::for_each_connected(params.n, [&](const Graph& g) {
      const bool ps = oracle::pairwise_stable(g, params);
      const bool pne = oracle_pne(g, params);
      CHECK(is_pairwise_stable(g, params).holds == ps);
      CHECK(is_pne(g, params).holds == pne);
      if (pne) CHECK(ps);  // a Nash profile nobody wants to extend is stable
      stable_count += ps;
    });
    CHECK(stable_count > 0);
  }
}

TEST_CASE("failed checks always hand back a verifiable witness") {
  std::mt19937_64 rng(90102);
  int witnessed = 0;
  while (witnessed < 40) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const GameParams params = blf(n, Rat(1 + rng() % 5, 1 + rng() % 4));
    const Graph g = oracle::random_connected(rng, n, 1, 3);
    const CheckResult r = is_pairwise_stable(g, params);
    if (r.holds) continue;
    ++witnessed;
    REQUIRE(r.witness.has_value());
    const DeviationWitness& w = *r.witness;
    REQUIRE(w.links.size() == 1);
    const Link e = w.links[0];
    if (w.kind == DeviationWitness::Kind::RemoveLink) {
      const GameParams cut_params = params;
      const ExtRat before = oracle::player_cost(canonical_blf_profile(g), w.player, cut_params);
      const ExtRat after = oracle::player_cost(
          canonical_blf_profile(g.without_link(e.a, e.b)), w.player, cut_params);
      CHECK(before == w.cost_before);
      CHECK(after == w.cost_after);
      CHECK(after < before);
    } else {
      REQUIRE(w.kind == DeviationWitness::Kind::AddLink);
      const Graph added = g.with_link(e.a, e.b);
      CHECK(oracle::player_cost(canonical_blf_profile(added), w.player, params) ==
            w.cost_after);
      CHECK(w.cost_after <= w.cost_before);
      CHECK(w.partner_after <= w.partner_before);
    }
  }
}

TEST_CASE("convexity of the uniform adversary's damage") {
  std::mt19937_64 rng(90103);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const GameParams params = blf(n, Rat(1));
    const Graph g = oracle::random_connected(rng, n, 1, 3);
    PlayerId v = 1 + static_cast<int>(rng() % n);
    while (g.degree(v) == 0) v = 1 + static_cast<int>(rng() % n);
    const auto nbrs = g.neighbors(v);
    std::vector<PlayerId> removals;
    for (PlayerId w : nbrs) {
      if (rng() % 2) removals.push_back(w);
    }
    if (removals.empty()) removals.push_back(nbrs[0]);
    CHECK(convexity_holds(canonical_blf_profile(g), v, removals, params));
  }
}

TEST_CASE("convexity argument validation") {
  const Graph g = make_star(4);
  const StrategyProfile s = canonical_blf_profile(g);
  const GameParams params = blf(4, Rat(1));
  CHECK_THROWS_AS(convexity_holds(s, 1, {}, params), std::invalid_argument);
  CHECK_THROWS_AS(convexity_holds(s, 1, {2, 2}, params), std::invalid_argument);
  CHECK_THROWS_AS(convexity_holds(s, 2, {3}, params), std::invalid_argument);  // not built
  CHECK_THROWS_AS(convexity_holds(s, 1, {1}, params), std::invalid_argument);
}

TEST_CASE("equilibrium predicates reject mismatched arguments") {
  const Graph g = make_cycle(4);
  const StrategyProfile s = canonical_blf_profile(g);
  CHECK_THROWS_AS(is_pne(g, ulf(4, Rat(1))), std::invalid_argument);
  CHECK_THROWS_AS(is_pairwise_stable(g, ulf(4, Rat(1))), std::invalid_argument);
  CHECK_THROWS_AS(is_nash_ulf(s, blf(4, Rat(1))), std::invalid_argument);
  CHECK_THROWS_AS(is_max_ne_ulf(s, blf(4, Rat(1))), std::invalid_argument);
  CHECK_THROWS_AS(is_pne(g, blf(5, Rat(1))), std::invalid_argument);  // n mismatch
  CHECK_THROWS_AS(is_nash_ulf(s, ulf(5, Rat(1))), std::invalid_argument);

  CustomTable table{{{Link{1, 2}, Rat(1)}}};
  CHECK_THROWS_AS(is_pne(g, blf(4, Rat(1), table)), std::invalid_argument);
  CHECK_THROWS_AS(is_pairwise_stable(g, blf(4, Rat(1), table)), std::invalid_argument);
  CHECK_THROWS_AS(is_nash_ulf(s, ulf(4, Rat(1), table)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_equilibria(blf(4, Rat(1), table), EqConcept::PsBlf),
                  std::invalid_argument);
}

TEST_CASE("size caps are enforced") {
  CHECK_THROWS_AS(is_nash_ulf(StrategyProfile(13), ulf(13, Rat(1))), std::invalid_argument);
  CHECK_THROWS_AS(is_pne(make_star(22), blf(22, Rat(1))), std::invalid_argument);
  CHECK_NOTHROW(is_pairwise_stable(make_star(22), blf(22, Rat(1))));
  CHECK_THROWS_AS(enumerate_equilibria(blf(9, Rat(1)), EqConcept::PsBlf), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_equilibria(ulf(8, Rat(1)), EqConcept::NeUlf), std::invalid_argument);
}

TEST_CASE("enumeration options are validated") {
  EnumOptions dedup;
  dedup.dedup_isomorphic = true;
  CHECK_THROWS_AS(enumerate_equilibria(ulf(4, Rat(1)), EqConcept::NeUlf, dedup),
                  std::invalid_argument);
  EnumOptions bad = dedup;
  bad.connected_only = false;
  CHECK_THROWS_AS(enumerate_equilibria(blf(4, Rat(1)), EqConcept::PsBlf, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_equilibria(blf(4, Rat(1)), EqConcept::NeUlf),
                  std::invalid_argument);  // concept and rule must agree
  CHECK_THROWS_AS(enumerate_equilibria(ulf(4, Rat(1)), EqConcept::PsBlf),
                  std::invalid_argument);
}

TEST_CASE("stable graph counts for four players") {
  CHECK(enumerate_equilibria(blf(4, Rat(1, 4)), EqConcept::PsBlf).size() == 3);
  CHECK(enumerate_equilibria(blf(4, Rat(1)), EqConcept::PsBlf).size() == 15);
  CHECK(enumerate_equilibria(blf(4, Rat(3)), EqConcept::PsBlf).size() == 16);
  CHECK(enumerate_equilibria(blf(4, Rat(10)), EqConcept::PsBlf).size() == 16);
  // at alpha = 1/4 the only stable shape is the 4-cycle, in its 3 labelings
  for (const StrategyProfile& s : enumerate_equilibria(blf(4, Rat(1, 4)), EqConcept::PsBlf)) {
    const Graph g = build_graph(s, FormationRule::Bilateral);
    CHECK(g.m() == 4);
    for (PlayerId v = 1; v <= 4; ++v) CHECK(g.degree(v) == 2);
  }
  // at alpha = 10 exactly the 16 labeled spanning trees survive
  for (const StrategyProfile& s : enumerate_equilibria(blf(4, Rat(10)), EqConcept::PsBlf)) {
    CHECK(build_graph(s, FormationRule::Bilateral).m() == 3);
  }
}

TEST_CASE("deduplicated enumeration keeps one labeling per shape") {
  EnumOptions dedup;
  dedup.dedup_isomorphic = true;
  CHECK(enumerate_equilibria(blf(4, Rat(1, 4)), EqConcept::PsBlf, dedup).size() == 1);
  CHECK(enumerate_equilibria(blf(4, Rat(10)), EqConcept::PsBlf, dedup).size() == 2);
  CHECK(enumerate_equilibria(blf(5, Rat(10)), EqConcept::PsBlf, dedup).size() == 3);
}

TEST_CASE("enumeration agrees with the definition-level oracle") {
  const GameParams params = blf(5, Rat(1), Smart{});
  std::vector<StrategyProfile> expected;
  oracle::for_each_connected(5, [&](const Graph& g) {
    if (oracle::pairwise_stable(g, params)) expected.push_back(canonical_blf_profile(g));
  });
  const auto got = enumerate_equilibria(params, EqConcept::PsBlf);
  CHECK(profile_set(got) == profile_set(expected));
  CHECK(got.size() == expected.size());
}

TEST_CASE("unilateral enumeration agrees with the profile fold") {
  const GameParams params = ulf(4, Rat(2, 3));
  std::vector<StrategyProfile> ne, maxne;
  for_each_profile(4, [&](const StrategyProfile& s) {
    if (!oracle_nash(s, params)) return;
    ne.push_back(s);
    if (oracle_max_nash(s, params)) maxne.push_back(s);
  });
  CHECK(profile_set(enumerate_equilibria(params, EqConcept::NeUlf)) == profile_set(ne));
  CHECK(profile_set(enumerate_equilibria(params, EqConcept::MaxNeUlf)) == profile_set(maxne));
  CHECK(!ne.empty());
  CHECK(!maxne.empty());
}

TEST_CASE("enumeration ignores the connected-only shortcut semantically") {
  EnumOptions all;
  all.connected_only = false;
  const GameParams params = blf(4, Rat(1));
  const auto fast = enumerate_equilibria(params, EqConcept::PsBlf);
  const auto slow = enumerate_equilibria(params, EqConcept::PsBlf, all);
  CHECK(profile_set(fast) == profile_set(slow));
}

TEST_CASE("enumeration output does not depend on the worker count") {
  for (int threads : {1, 3, 7}) {
    EnumOptions opt;
    opt.threads = threads;
    const auto got = enumerate_equilibria(blf(5, Rat(1)), EqConcept::PsBlf, opt);
    const auto base = enumerate_equilibria(blf(5, Rat(1)), EqConcept::PsBlf);
    REQUIRE(got.size() == base.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == base[i]);
  }
}

TEST_CASE("price of anarchy for four players, pairwise stability") {
  const PoAReport cheap = price_of_anarchy(blf(4, Rat(1, 4)), EqConcept::PsBlf);
  CHECK(cheap.count == 3);
  CHECK(cheap.optimum == Rat(2));
  CHECK(cheap.worst_social == Rat(2));
  CHECK(cheap.ratio == Rat(1));

  const PoAReport mid = price_of_anarchy(blf(4, Rat(1)), EqConcept::PsBlf);
  CHECK(mid.count == 15);
  CHECK(mid.optimum == Rat(8));
  CHECK(mid.worst_social == Rat(19, 2));
  CHECK(mid.ratio == Rat(19, 16));
  REQUIRE(mid.witness.has_value());
  CHECK(oracle::social_cost(*mid.witness, blf(4, Rat(1))) == ExtRat(Rat(19, 2)));

  const PoAReport high = price_of_anarchy(blf(4, Rat(3)), EqConcept::PsBlf);
  CHECK(high.count == 16);
  CHECK(high.worst_social == Rat(74, 3));
  CHECK(high.ratio == Rat(37, 36));

  const PoAReport trees = price_of_anarchy(blf(4, Rat(10)), EqConcept::PsBlf);
  CHECK(trees.count == 16);
  CHECK(trees.optimum == Rat(66));
  CHECK(trees.worst_social == Rat(200, 3));
  CHECK(trees.ratio == Rat(100, 99));
}

TEST_CASE("price of anarchy matches a hand fold for the unilateral rule") {
  const GameParams params = ulf(4, Rat(2, 3));
  std::optional<Rat> worst;
  long long count = 0;
  for_each_profile(4, [&](const StrategyProfile& s) {
    if (!oracle_nash(s, params)) return;
    ++count;
    const Rat sc = oracle::social_cost(s, params).finite();
    if (!worst || sc > *worst) worst = sc;
  });
  const PoAReport report = price_of_anarchy(params, EqConcept::NeUlf);
  CHECK(report.count == count);
  CHECK(report.worst_social == worst);
  CHECK(report.ratio == *worst / optimum(4, Rat(2, 3)).value);
}

TEST_CASE("price of anarchy determinism across worker counts") {
  EnumOptions three;
  three.threads = 3;
  const PoAReport a = price_of_anarchy(blf(5, Rat(1)), EqConcept::PsBlf);
  const PoAReport b = price_of_anarchy(blf(5, Rat(1)), EqConcept::PsBlf, three);
  CHECK(a.count == b.count);
  CHECK(a.worst_social == b.worst_social);
  CHECK(a.ratio == b.ratio);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);
}

TEST_SUITE_END();
