#pragma once

// Strategy profiles for the link formation game. Player v's strategy is the
// 0/1 row S_v; entry S_vw says whether v requests a link to w. Under the
// unilateral rule one request builds the link, under the bilateral rule both
// are needed. The diagonal is meaningless and always stored as 0.

#include <cstdint>
#include <vector>

#include "anarchy/adversary.hpp"
#include "anarchy/graph.hpp"
#include "anarchy/rational.hpp"

namespace anarchy {

enum class FormationRule { Unilateral, Bilateral };

class StrategyProfile {
 public:
  explicit StrategyProfile(int n);  // all-zero, n >= 3

  int n() const { return n_; }
  bool requests(PlayerId v, PlayerId w) const;
  int request_count(PlayerId v) const;  // ||S_v||_1

  // Returns a copy with S_vw set to `on`. Rejects v == w and bad ids.
  StrategyProfile with_request(PlayerId v, PlayerId w, bool on) const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

  int words_per_row() const { return words_; }
  const std::uint64_t* row(PlayerId v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  void check(PlayerId v) const;
};

// The graph a profile builds under the given rule.
Graph build_graph(const StrategyProfile& s, FormationRule rule);

// No wasted requests: unilateral forbids reciprocated pairs, bilateral forbids
// unreciprocated ones.
bool is_essential(const StrategyProfile& s, FormationRule rule);

// S^B: request {v,w} iff at least one of S_vw, S_wv is set. The result is
// essential under the bilateral rule and builds the same graph the input
// builds under the unilateral rule.
StrategyProfile bilateralize(const StrategyProfile& s);

// The symmetric profile that builds g under the bilateral rule. This is the
// profile meant whenever a graph stands in for a bilateral strategy profile.
// Owners for the unilateral rule are never synthesized here; unilateral
// profiles come from explicit construction or the profile fixtures.
StrategyProfile canonical_blf_profile(const Graph& g);

struct GameParams {
  int n = 0;
  Rat alpha;  // link price, > 0
  FormationRule rule = FormationRule::Bilateral;
  AdversaryKind adversary = SimpleMinded{};
};

// Throws std::invalid_argument unless n >= 3 and alpha > 0.
void validate_params(const GameParams& params);

}  // namespace anarchy
