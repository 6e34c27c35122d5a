#include "scratch.hpp"

#include <bit>
#include <cassert>

namespace anarchy::detail {

void Scratch::load(const Graph& g) {
  n = g.n();
  words = g.words_per_row();
  m = g.m();
  bits.assign(g.row(0), g.row(0) + static_cast<std::size_t>(n + 1) * words);
}

void Scratch::flip(PlayerId v, PlayerId w) {
  assert(v != w && v >= 1 && w >= 1 && v <= n && w <= n);
  const bool was = has(v, w);
  bits[static_cast<std::size_t>(v) * words + w / 64] ^= std::uint64_t{1} << (w % 64);
  bits[static_cast<std::size_t>(w) * words + v / 64] ^= std::uint64_t{1} << (v % 64);
  m += was ? -1 : 1;
}

bool Scratch::has(PlayerId v, PlayerId w) const {
  return (bits[static_cast<std::size_t>(v) * words + w / 64] >> (w % 64)) & 1;
}

void Scratch::scan() {
  tin.assign(n + 1, 0);
  tout.assign(n + 1, 0);
  low_.assign(n + 1, 0);
  size_.assign(n + 1, 1);
  bridges.clear();
  stack_.clear();

  int timer = 1;
  int visited = 0;
  int components = 0;

  for (int root = 1; root <= n; ++root) {
    if (tin[root]) continue;
    ++components;
    stack_.push_back(Frame{root, 0, 0, bits[static_cast<std::size_t>(root) * words]});
    tin[root] = low_[root] = timer++;
    ++visited;
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      // next unexplored neighbor of f.v, resuming the word scan
      int w = -1;
      while (f.word < words) {
        if (f.pending) {
          w = f.word * 64 + std::countr_zero(f.pending);
          f.pending &= f.pending - 1;
          if (w == f.parent) {  // simple graph: the one parent edge
            w = -1;
            continue;
          }
          break;
        }
        ++f.word;
        if (f.word < words) {
          f.pending = bits[static_cast<std::size_t>(f.v) * words + f.word];
        }
      }
      if (w < 0) {
        // done with f.v
        tout[f.v] = timer;
        const int v = f.v;
        const int p = f.parent;
        stack_.pop_back();
        if (p != 0) {
          if (low_[v] < low_[p]) low_[p] = low_[v];
          size_[p] += size_[v];
          if (low_[v] > tin[p]) bridges.push_back(BridgeEdge{p, v, size_[v]});
        }
        continue;
      }
      if (tin[w]) {
        if (tin[w] < low_[f.v]) low_[f.v] = tin[w];
      } else {
        tin[w] = low_[w] = timer++;
        size_[w] = 1;
        ++visited;
        stack_.push_back(Frame{w, f.v, 0, bits[static_cast<std::size_t>(w) * words]});
      }
    }
  }
  connected = components <= 1 && visited == n;
}

}  // namespace anarchy::detail
