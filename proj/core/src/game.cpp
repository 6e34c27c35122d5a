#include "anarchy/game.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace anarchy {

StrategyProfile::StrategyProfile(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("the game needs at least 3 players");
  words_ = n_ / 64 + 1;
  bits_.assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
}

void StrategyProfile::check(PlayerId v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("player " + std::to_string(v) + " not in 1.." +
                            std::to_string(n_));
  }
}

bool StrategyProfile::requests(PlayerId v, PlayerId w) const {
  check(v);
  check(w);
  if (v == w) return false;
  return (row(v)[w / 64] >> (w % 64)) & 1;
}

int StrategyProfile::request_count(PlayerId v) const {
  check(v);
  int c = 0;
  const std::uint64_t* r = row(v);
  for (int i = 0; i < words_; ++i) c += std::popcount(r[i]);
  return c;
}

StrategyProfile StrategyProfile::with_request(PlayerId v, PlayerId w, bool on) const {
  check(v);
  check(w);
  if (v == w) throw std::invalid_argument("players cannot request links to themselves");
  StrategyProfile s = *this;
  auto& word = s.bits_[static_cast<std::size_t>(v) * words_ + w / 64];
  const std::uint64_t mask = std::uint64_t{1} << (w % 64);
  if (on) {
    word |= mask;
  } else {
    word &= ~mask;
  }
  return s;
}

Graph build_graph(const StrategyProfile& s, FormationRule rule) {
  const int n = s.n();
  std::vector<Link> links;
  for (PlayerId v = 1; v <= n; ++v) {
    for (PlayerId w = v + 1; w <= n; ++w) {
      const bool vw = s.requests(v, w);
      const bool wv = s.requests(w, v);
      const bool built =
          rule == FormationRule::Unilateral ? (vw || wv) : (vw && wv);
      if (built) links.push_back(Link{v, w});
    }
  }
  return Graph(n, links);
}

bool is_essential(const StrategyProfile& s, FormationRule rule) {
  const int n = s.n();
  for (PlayerId v = 1; v <= n; ++v) {
    for (PlayerId w = v + 1; w <= n; ++w) {
      const bool vw = s.requests(v, w);
      const bool wv = s.requests(w, v);
      if (rule == FormationRule::Unilateral && vw && wv) return false;
      if (rule == FormationRule::Bilateral && vw != wv) return false;
    }
  }
  return true;
}

StrategyProfile bilateralize(const StrategyProfile& s) {
  StrategyProfile out(s.n());
  for (PlayerId v = 1; v <= s.n(); ++v) {
    for (PlayerId w = v + 1; w <= s.n(); ++w) {
      if (s.requests(v, w) || s.requests(w, v)) {
        out = out.with_request(v, w, true).with_request(w, v, true);
      }
    }
  }
  return out;
}

StrategyProfile canonical_blf_profile(const Graph& g) {
  StrategyProfile s(g.n());
  for (const Link& e : g.links()) {
    s = s.with_request(e.a, e.b, true).with_request(e.b, e.a, true);
  }
  return s;
}

void validate_params(const GameParams& params) {
  if (params.n < 3) throw std::invalid_argument("the game needs at least 3 players");
  if (!(params.alpha > 0)) throw std::invalid_argument("alpha must be positive");
}

}  // namespace anarchy
