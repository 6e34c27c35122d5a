#pragma once

// Internal mutable adjacency scratch shared by the bridge analysis and the
// equilibrium checkers. One buffer, flip links in place, rescan. The scan is
// a single iterative DFS producing bridges with child-subtree sizes and Euler
// intervals, which is all that relevance and separation need.

#include <cstdint>
#include <vector>

#include "anarchy/graph.hpp"

namespace anarchy::detail {

struct BridgeEdge {
  int parent = 0;
  int child = 0;      // the DFS-subtree side of the bridge
  long long size = 0;  // vertices in the child subtree
};

struct Scratch {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;  // (n+1) rows of `words` each
  long long m = 0;

  // scan() outputs
  bool connected = false;
  std::vector<BridgeEdge> bridges;
  std::vector<int> tin, tout;

  void load(const Graph& g);
  void flip(PlayerId v, PlayerId w);  // toggles the link, tracks m
  bool has(PlayerId v, PlayerId w) const;

  // Full DFS over all components; fills connected/bridges/tin/tout.
  void scan();

  // Relevance of a scanned bridge for v: size of the side not containing v.
  long long rel(const BridgeEdge& b, PlayerId v) const {
    const bool inside = tin[b.child] <= tin[v] && tin[v] < tout[b.child];
    return inside ? n - b.size : b.size;
  }

  long long rel_sum(PlayerId v) const {
    long long total = 0;
    for (const BridgeEdge& b : bridges) total += rel(b, v);
    return total;
  }

  // 2(n - s)s summed over scanned bridges.
  long long total_separation() const {
    long long total = 0;
    for (const BridgeEdge& b : bridges) total += 2 * b.size * (n - b.size);
    return total;
  }

 private:
  // DFS state kept here so repeated scans do not reallocate.
  std::vector<int> low_, size_;
  struct Frame {
    int v;
    int parent;
    int word;
    std::uint64_t pending;
  };
  std::vector<Frame> stack_;
};

}  // namespace anarchy::detail
