#include "anarchy/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace anarchy {

Link make_link(PlayerId v, PlayerId w) {
  if (v < 1 || w < 1) throw std::invalid_argument("player ids start at 1");
  if (v == w) throw std::invalid_argument("no self-links: " + std::to_string(v));
  if (v > w) std::swap(v, w);
  return Link{v, w};
}

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one player");
  words_ = n_ / 64 + 1;
  bits_.assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
}

Graph::Graph(int n, const std::vector<Link>& links) : Graph(n) {
  for (const Link& e : links) {
    if (e.a >= e.b) throw std::invalid_argument("link endpoints must satisfy a < b");
    check_player(e.a);
    check_player(e.b);
    if (has_link(e.a, e.b)) {
      throw std::invalid_argument("duplicate link " + std::to_string(e.a) + "-" +
                                  std::to_string(e.b));
    }
    set_bit(e.a, e.b);
    set_bit(e.b, e.a);
    ++m_;
  }
}

void Graph::check_player(PlayerId v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("player " + std::to_string(v) + " not in 1.." +
                            std::to_string(n_));
  }
}

void Graph::set_bit(PlayerId v, PlayerId w) {
  bits_[static_cast<std::size_t>(v) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
}

void Graph::clear_bit(PlayerId v, PlayerId w) {
  bits_[static_cast<std::size_t>(v) * words_ + w / 64] &= ~(std::uint64_t{1} << (w % 64));
}

bool Graph::has_link(PlayerId v, PlayerId w) const {
  check_player(v);
  check_player(w);
  if (v == w) return false;
  return (row(v)[w / 64] >> (w % 64)) & 1;
}

int Graph::degree(PlayerId v) const {
  check_player(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
  return d;
}

std::vector<Link> Graph::links() const {
  std::vector<Link> out;
  out.reserve(m_);
  for (PlayerId v = 1; v <= n_; ++v) {
    const std::uint64_t* r = row(v);
    for (int i = 0; i < words_; ++i) {
      std::uint64_t word = r[i];
      while (word) {
        const int w = i * 64 + std::countr_zero(word);
        word &= word - 1;
        if (w > v) out.push_back(Link{v, w});
      }
    }
  }
  return out;
}

std::vector<PlayerId> Graph::neighbors(PlayerId v) const {
  check_player(v);
  std::vector<PlayerId> out;
  const std::uint64_t* r = row(v);
  for (int i = 0; i < words_; ++i) {
    std::uint64_t word = r[i];
    while (word) {
      out.push_back(i * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

Graph Graph::with_link(PlayerId v, PlayerId w) const {
  const Link e = make_link(v, w);
  check_player(e.b);
  if (has_link(e.a, e.b)) {
    throw std::invalid_argument("link already present: " + std::to_string(e.a) + "-" +
                                std::to_string(e.b));
  }
  Graph g = *this;
  g.set_bit(e.a, e.b);
  g.set_bit(e.b, e.a);
  ++g.m_;
  return g;
}

Graph Graph::without_link(PlayerId v, PlayerId w) const {
  const Link e = make_link(v, w);
  check_player(e.b);
  if (!has_link(e.a, e.b)) {
    throw std::invalid_argument("link not present: " + std::to_string(e.a) + "-" +
                                std::to_string(e.b));
  }
  Graph g = *this;
  g.clear_bit(e.a, e.b);
  g.clear_bit(e.b, e.a);
  --g.m_;
  return g;
}

bool Graph::connected() const {
  if (n_ == 1) return true;
  std::vector<std::uint64_t> seen(words_, 0);
  std::vector<PlayerId> stack{1};
  seen[1 / 64] |= std::uint64_t{1} << (1 % 64);
  int visited = 1;
  while (!stack.empty()) {
    const PlayerId v = stack.back();
    stack.pop_back();
    const std::uint64_t* r = row(v);
    for (int i = 0; i < words_; ++i) {
      std::uint64_t fresh = r[i] & ~seen[i];
      seen[i] |= fresh;
      while (fresh) {
        stack.push_back(i * 64 + std::countr_zero(fresh));
        fresh &= fresh - 1;
        ++visited;
      }
    }
  }
  return visited == n_;
}

}  // namespace anarchy
