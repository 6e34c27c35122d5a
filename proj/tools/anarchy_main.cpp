// anarchy: exact analysis of bilateral and unilateral network formation
// against a link-destroying adversary. Exit codes: 0 success (and satisfied
// checks), 1 failed check or mismatched --expect, 2 usage or input errors.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "anarchy/adversary.hpp"
#include "anarchy/bridge.hpp"
#include "anarchy/cost.hpp"
#include "anarchy/enumerate.hpp"
#include "anarchy/equilibrium.hpp"
#include "anarchy/fixtures.hpp"
#include "anarchy/formats.hpp"
#include "anarchy/game.hpp"
#include "report.hpp"

namespace {

using namespace anarchy;
using cli::Input;
using cli::Json;

struct SourceOpts {
  std::string fixture;
  std::string input;
  std::string profile;
};

void add_source_opts(CLI::App* sub, SourceOpts& src, bool with_profile) {
  sub->add_option("--fixture", src.fixture,
                  "named fixture, e.g. cycle:6, star:5, three_stars:5, "
                  "cycle_with_path:16,4, bridge_showcase");
  sub->add_option("--input", src.input, "graph file ('graph <n> <m>' plus links)");
  if (with_profile)
    sub->add_option("--profile", src.profile, "profile file ('profile <n>' plus requests)");
}

Input load_input(const SourceOpts& src) {
  const int given = (!src.fixture.empty()) + (!src.input.empty()) + (!src.profile.empty());
  if (given != 1)
    throw std::invalid_argument("give exactly one of --fixture, --input, --profile");
  if (!src.fixture.empty()) return make_fixture(src.fixture);
  if (!src.input.empty()) return read_graph_file(src.input);
  return read_profile_file(src.profile);
}

struct AdversaryOpts {
  std::string name = "simple";
  std::string table;
};

void add_adversary_opts(CLI::App* sub, AdversaryOpts& adv) {
  sub->add_option("--adversary", adv.name, "simple, smart, or custom")
      ->check(CLI::IsMember({"simple", "smart", "custom"}));
  sub->add_option("--table", adv.table, "JSON link probabilities for --adversary custom");
}

AdversaryKind load_adversary(const AdversaryOpts& adv) {
  if (adv.name == "custom") {
    if (adv.table.empty()) throw std::invalid_argument("--adversary custom needs --table");
    return read_custom_table_file(adv.table);
  }
  if (!adv.table.empty()) throw std::invalid_argument("--table only applies to --adversary custom");
  if (adv.name == "smart") return Smart{};
  return SimpleMinded{};
}

int input_n(const Input& in) {
  return std::holds_alternative<Graph>(in) ? std::get<Graph>(in).n()
                                           : std::get<StrategyProfile>(in).n();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ----- analyze -----

struct AnalyzeOpts {
  SourceOpts src;
  AdversaryOpts adv;
  std::string alpha = "1";
  std::string rule = "auto";
  std::string format = "text";
};

int run_analyze(const AnalyzeOpts& opt) {
  const Input in = load_input(opt.src);
  FormationRule rule = FormationRule::Bilateral;
  if (opt.rule == "unilateral") rule = FormationRule::Unilateral;
  if (opt.rule == "auto" && std::holds_alternative<StrategyProfile>(in))
    rule = FormationRule::Unilateral;
  if (rule == FormationRule::Unilateral && std::holds_alternative<Graph>(in))
    throw std::invalid_argument("a bare graph has no owners; the unilateral rule needs a profile");

  GameParams params{input_n(in), parse_rat(opt.alpha), rule, load_adversary(opt.adv)};
  validate_params(params);
  if (opt.format == "dot") {
    std::cout << dot_graph(cli::built_graph(in, rule));
    return 0;
  }
  if (opt.format == "json") {
    print_json(cli::analyze_json(in, params));
    return 0;
  }
  std::cout << cli::analyze_text(in, params);
  return 0;
}

// ----- check -----

struct CheckOpts {
  SourceOpts src;
  AdversaryOpts adv;
  std::string concept_str;
  std::string alpha = "1";
  std::string expect;
  std::string format = "text";
};

int run_check(const CheckOpts& opt) {
  const EqConcept eq = concept_from_name(opt.concept_str);
  const Input in = load_input(opt.src);
  const bool unilateral = eq == EqConcept::NeUlf || eq == EqConcept::MaxNeUlf;

  GameParams params{input_n(in), parse_rat(opt.alpha),
                    unilateral ? FormationRule::Unilateral : FormationRule::Bilateral,
                    load_adversary(opt.adv)};

  CheckResult result;
  if (unilateral) {
    if (!std::holds_alternative<StrategyProfile>(in))
      throw std::invalid_argument(concept_name(eq) +
                                  " checks a profile with owners; give --profile or a "
                                  "profile fixture");
    const StrategyProfile& s = std::get<StrategyProfile>(in);
    result = eq == EqConcept::NeUlf ? is_nash_ulf(s, params) : is_max_ne_ulf(s, params);
  } else {
    if (!std::holds_alternative<Graph>(in))
      throw std::invalid_argument(concept_name(eq) +
                                  " checks a graph; give --input or a graph fixture");
    const Graph& g = std::get<Graph>(in);
    result = eq == EqConcept::PneBlf ? is_pne(g, params) : is_pairwise_stable(g, params);
  }

  if (opt.format == "json")
    print_json(cli::check_json(eq, result));
  else
    std::cout << cli::check_text(eq, result);

  if (!opt.expect.empty()) {
    const bool expected = opt.expect == "true";
    return result.holds == expected ? 0 : 1;
  }
  return result.holds ? 0 : 1;
}

// ----- enumerate -----

struct EnumerateOpts {
  AdversaryOpts adv;
  int n = 0;
  std::string concept_str;
  std::string alpha = "1";
  bool all = false;
  bool dedup = false;
  bool count_only = false;
  int threads = 0;
  std::string format = "text";
};

int run_enumerate(const EnumerateOpts& opt) {
  const EqConcept eq = concept_from_name(opt.concept_str);
  const bool unilateral = eq == EqConcept::NeUlf || eq == EqConcept::MaxNeUlf;
  GameParams params{opt.n, parse_rat(opt.alpha),
                    unilateral ? FormationRule::Unilateral : FormationRule::Bilateral,
                    load_adversary(opt.adv)};
  EnumOptions options;
  options.connected_only = !opt.all;
  options.dedup_isomorphic = opt.dedup;
  options.threads = opt.threads;

  const std::vector<StrategyProfile> hits = enumerate_equilibria(params, eq, options);
  if (opt.format == "json")
    print_json(cli::enumerate_json(params, eq, hits, opt.count_only));
  else
    std::cout << cli::enumerate_text(params, eq, hits, opt.count_only);
  return 0;
}

// ----- poa -----

struct PoaOpts {
  AdversaryOpts adv;
  int n = 0;
  std::string concept_str;
  std::string alpha = "1";
  std::string sweep;
  bool all = false;
  bool dedup = false;
  int threads = 0;
  std::string format = "text";
};

int run_poa(const PoaOpts& opt) {
  const EqConcept eq = concept_from_name(opt.concept_str);
  const bool unilateral = eq == EqConcept::NeUlf || eq == EqConcept::MaxNeUlf;

  std::vector<Rat> alphas;
  if (!opt.sweep.empty()) {
    std::istringstream iss(opt.sweep);
    std::string piece;
    while (std::getline(iss, piece, ',')) alphas.push_back(parse_rat(piece));
    if (alphas.empty()) throw std::invalid_argument("--sweep needs at least one alpha");
  } else {
    alphas.push_back(parse_rat(opt.alpha));
  }

  EnumOptions options;
  options.connected_only = !opt.all;
  options.dedup_isomorphic = opt.dedup;
  options.threads = opt.threads;

  std::vector<PoAReport> rows;
  for (const Rat& alpha : alphas) {
    GameParams params{opt.n, alpha,
                      unilateral ? FormationRule::Unilateral : FormationRule::Bilateral,
                      load_adversary(opt.adv)};
    rows.push_back(price_of_anarchy(params, eq, options));
  }

  if (opt.format == "json")
    print_json(cli::poa_json(rows));
  else if (opt.format == "csv")
    std::cout << cli::poa_csv(rows);
  else
    std::cout << cli::poa_text(rows);
  return 0;
}

// ----- dynamics -----

struct DynamicsOpts {
  SourceOpts src;
  AdversaryOpts adv;
  std::string alpha = "1";
  std::string policy = "lex";
  std::uint64_t seed = 1;
  int max_steps = 1000;
  std::string format = "text";
};

int run_dynamics(const DynamicsOpts& opt) {
  const Input in = load_input(opt.src);
  if (!std::holds_alternative<Graph>(in))
    throw std::invalid_argument("dynamics runs on graphs; give --input or a graph fixture");
  const Graph& g = std::get<Graph>(in);
  GameParams params{g.n(), parse_rat(opt.alpha), FormationRule::Bilateral,
                    load_adversary(opt.adv)};
  const DynamicsPolicy policy =
      opt.policy == "random" ? DynamicsPolicy::SeededRandom : DynamicsPolicy::Lexicographic;
  const DynamicsResult result = pairwise_dynamics(g, params, policy, opt.seed, opt.max_steps);
  if (opt.format == "json")
    print_json(cli::dynamics_json(params, result));
  else
    std::cout << cli::dynamics_text(params, result);
  return 0;
}

// ----- construct -----

struct ConstructOpts {
  std::string fixture;
  std::string format = "text";
};

int run_construct(const ConstructOpts& opt) {
  const Input in = make_fixture(opt.fixture);
  if (const Graph* g = std::get_if<Graph>(&in)) {
    if (opt.format == "dot")
      std::cout << dot_graph(*g);
    else if (opt.format == "json")
      print_json(cli::graph_json(*g));
    else
      write_graph(std::cout, *g);
    return 0;
  }
  const StrategyProfile& s = std::get<StrategyProfile>(in);
  if (opt.format == "dot")
    throw std::invalid_argument("dot output needs a graph fixture");
  if (opt.format == "json")
    print_json(cli::profile_json(s));
  else
    write_profile(std::cout, s);
  return 0;
}

// ----- oracle -----

struct OracleOpts {
  int trials = 200;
  std::uint64_t seed = 1;
  int max_n = 16;
};

// Randomized identity checks tying the fast structures to first principles.
int run_oracle(const OracleOpts& opt) {
  if (opt.trials < 1 || opt.max_n < 3)
    throw std::invalid_argument("oracle needs --trials >= 1 and --max-n >= 3");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> pick_n(3, opt.max_n);
  std::uniform_real_distribution<double> pick_extra(0.0, 0.35);

  long long bridge_checks = 0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int n = pick_n(rng);
    const Graph g = random_connected_graph(rng, n, pick_extra(rng));
    const auto bs = bridges(g);

    long long sep_total = 0;
    for (const Link& e : bs) {
      const Separation sep = separation(g, e);
      long long rel_total = 0;
      for (PlayerId v = 1; v <= n; ++v) {
        const long long fast = relevance(g, e, v);
        const long long slow = relevance_naive(g, e, v);
        if (fast != slow) {
          std::cout << "oracle FAILED: relevance mismatch at trial " << trial << ", link "
                    << cli::link_str(e) << ", player " << v << ": " << fast << " vs " << slow
                    << "\n";
          return 1;
        }
        rel_total += fast;
        ++bridge_checks;
      }
      if (rel_total != sep.sep) {
        std::cout << "oracle FAILED: separation identity at trial " << trial << ", link "
                  << cli::link_str(e) << "\n";
        return 1;
      }
      sep_total += sep.sep;
    }
    if (sep_total != total_separation(g)) {
      std::cout << "oracle FAILED: total separation at trial " << trial << "\n";
      return 1;
    }
    for (PlayerId v = 1; v <= n; ++v) {
      const long long r = relevance_sum(g, v);
      if (r < 0 || r > static_cast<long long>(n) * (n - 1) / 2) {
        std::cout << "oracle FAILED: relevance sum out of range at trial " << trial
                  << ", player " << v << "\n";
        return 1;
      }
    }

    const BridgeTree t = bridge_tree(g);
    if (t.total_weight() != n || t.tree_links().size() != bs.size()) {
      std::cout << "oracle FAILED: bridge tree accounting at trial " << trial << "\n";
      return 1;
    }

    for (const AdversaryKind kind : {AdversaryKind{SimpleMinded{}}, AdversaryKind{Smart{}}}) {
      const LinkDistribution dist = distribution(g, kind);
      Rat sum;
      for (const auto& [e, p] : dist.prob) sum += p;
      if (sum != 1) {
        std::cout << "oracle FAILED: " << adversary_name(kind)
                  << " distribution does not sum to 1 at trial " << trial << "\n";
        return 1;
      }
    }

    // convexity of the damage of joint removals, on the canonical profile
    const StrategyProfile s = canonical_blf_profile(g);
    GameParams params{n, Rat(1), FormationRule::Bilateral, SimpleMinded{}};
    std::uniform_int_distribution<int> pick_v(1, n);
    const PlayerId v = pick_v(rng);
    std::vector<PlayerId> nbs = g.neighbors(v);
    std::shuffle(nbs.begin(), nbs.end(), rng);
    if (nbs.size() > 3) nbs.resize(3);
    if (!nbs.empty() && !convexity_holds(s, v, nbs, params)) {
      std::cout << "oracle FAILED: removal convexity at trial " << trial << ", player " << v
                << "\n";
      return 1;
    }

    // social cost equals the sum of the player costs
    const CostReport report = cost_report(s, params);
    ExtRat total;
    for (const auto& row : report.players) total += row.total;
    if (!(total == report.social)) {
      std::cout << "oracle FAILED: social cost mismatch at trial " << trial << "\n";
      return 1;
    }
  }

  std::cout << "oracle: " << opt.trials << " trials, " << bridge_checks
            << " relevance checks, all identities held\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of network formation against a link-destroying adversary"};
  app.require_subcommand(1);
  int rc = 0;

  AnalyzeOpts analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "bridges, adversary, and costs of one network");
  add_source_opts(analyze, analyze_opt.src, true);
  add_adversary_opts(analyze, analyze_opt.adv);
  analyze->add_option("--alpha", analyze_opt.alpha, "link price, exact rational");
  analyze->add_option("--rule", analyze_opt.rule, "auto, bilateral, or unilateral")
      ->check(CLI::IsMember({"auto", "bilateral", "unilateral"}));
  analyze->add_option("--format", analyze_opt.format, "text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  analyze->callback([&] { rc = run_analyze(analyze_opt); });

  CheckOpts check_opt;
  auto* check = app.add_subcommand("check", "test one network for an equilibrium concept");
  add_source_opts(check, check_opt.src, true);
  add_adversary_opts(check, check_opt.adv);
  check->add_option("--concept", check_opt.concept_str, "ne, maxne, pne, or ps")->required();
  check->add_option("--alpha", check_opt.alpha, "link price, exact rational");
  check->add_option("--expect", check_opt.expect, "exit 0 iff the result matches")
      ->check(CLI::IsMember({"true", "false"}));
  check->add_option("--format", check_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->callback([&] { rc = run_check(check_opt); });

  EnumerateOpts enum_opt;
  auto* enumerate = app.add_subcommand("enumerate", "list every equilibrium at this size");
  add_adversary_opts(enumerate, enum_opt.adv);
  enumerate->add_option("--n", enum_opt.n, "player count")->required();
  enumerate->add_option("--concept", enum_opt.concept_str, "ne, maxne, pne, or ps")->required();
  enumerate->add_option("--alpha", enum_opt.alpha, "link price, exact rational");
  enumerate->add_flag("--all", enum_opt.all, "include disconnected candidates");
  enumerate->add_flag("--dedup", enum_opt.dedup, "one profile per isomorphism class");
  enumerate->add_flag("--count-only", enum_opt.count_only, "print the count, not the list");
  enumerate->add_option("--threads", enum_opt.threads, "worker threads, 0 = automatic");
  enumerate->add_option("--format", enum_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->callback([&] { rc = run_enumerate(enum_opt); });

  PoaOpts poa_opt;
  auto* poa = app.add_subcommand("poa", "worst equilibrium cost over the optimum");
  add_adversary_opts(poa, poa_opt.adv);
  poa->add_option("--n", poa_opt.n, "player count")->required();
  poa->add_option("--concept", poa_opt.concept_str, "ne, maxne, pne, or ps")->required();
  poa->add_option("--alpha", poa_opt.alpha, "link price, exact rational");
  poa->add_option("--sweep", poa_opt.sweep, "comma-separated alphas, overrides --alpha");
  poa->add_flag("--all", poa_opt.all, "include disconnected candidates");
  poa->add_flag("--dedup", poa_opt.dedup, "one candidate per isomorphism class");
  poa->add_option("--threads", poa_opt.threads, "worker threads, 0 = automatic");
  poa->add_option("--format", poa_opt.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  poa->callback([&] { rc = run_poa(poa_opt); });

  DynamicsOpts dyn_opt;
  auto* dynamics = app.add_subcommand("dynamics", "run improving moves to a stable network");
  add_source_opts(dynamics, dyn_opt.src, false);
  add_adversary_opts(dynamics, dyn_opt.adv);
  dynamics->add_option("--alpha", dyn_opt.alpha, "link price, exact rational");
  dynamics->add_option("--policy", dyn_opt.policy, "lex or random")
      ->check(CLI::IsMember({"lex", "random"}));
  dynamics->add_option("--seed", dyn_opt.seed, "seed for --policy random");
  dynamics->add_option("--max-steps", dyn_opt.max_steps, "step budget");
  dynamics->add_option("--format", dyn_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  dynamics->callback([&] { rc = run_dynamics(dyn_opt); });

  ConstructOpts construct_opt;
  auto* construct = app.add_subcommand("construct", "print a named fixture as a file");
  construct->add_option("--fixture", construct_opt.fixture, "named fixture, e.g. three_stars:5")
      ->required();
  construct->add_option("--format", construct_opt.format, "text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  construct->callback([&] { rc = run_construct(construct_opt); });

  OracleOpts oracle_opt;
  auto* oracle = app.add_subcommand("oracle", "randomized cross-checks of the fast structures");
  oracle->add_option("--trials", oracle_opt.trials, "number of random graphs");
  oracle->add_option("--seed", oracle_opt.seed, "random seed");
  oracle->add_option("--max-n", oracle_opt.max_n, "largest player count");
  oracle->callback([&] { rc = run_oracle(oracle_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
