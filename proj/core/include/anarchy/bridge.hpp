#pragma once

// Bridge structure of a connected graph and the relevance bookkeeping built
// on it. rel(e, v) counts the vertices v can reach only through e; it is 0
// unless e is a bridge, in which case it is the size of the far side of
// G - e. sep(e) counts ordered pairs separated by removing e.

#include <vector>

#include "anarchy/graph.hpp"

namespace anarchy {

// Sorted list of bridges. Errors on a disconnected graph.
std::vector<Link> bridges(const Graph& g);

// Computed from one DFS (low-link values plus subtree sizes); no link is
// ever deleted. Requires g connected and e a link.
long long relevance(const Graph& g, Link e, PlayerId v);

// Independent oracle for relevance: actually deletes e and counts the
// vertices a breadth-first search from v no longer reaches. Kept naive on
// purpose so the two routes stay separate.
long long relevance_naive(const Graph& g, Link e, PlayerId v);

// R(v) = sum of rel(e, v) over all links.
long long relevance_sum(const Graph& g, PlayerId v);

struct Separation {
  long long min_side = 0;  // smaller component of G - e; 0 for non-bridges
  long long sep = 0;       // 2 * min_side * (n - min_side)
};

Separation separation(const Graph& g, Link e);

long long total_separation(const Graph& g);

// A chord is a non-bridge link whose removal leaves the bridge set unchanged
// (equivalently: its endpoints stay 2-edge-connected without it). Removing a
// chord changes no relevance value.
bool is_chord(const Graph& g, Link e);
bool chord_free(const Graph& g);

// Contraction of the 2-edge-connected components. Nodes are identified by the
// smallest player id inside the component, weights are component sizes, and
// the tree links are in bijection with the bridges of the graph.
class BridgeTree {
 public:
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<PlayerId>& nodes() const { return nodes_; }  // sorted
  long long weight(PlayerId node) const;
  PlayerId node_of(PlayerId player) const;   // node containing the player
  std::vector<Link> tree_links() const;      // sorted pairs of node ids
  Link bridge_of(const Link& tree_link) const;
  std::vector<PlayerId> tree_neighbors(PlayerId node) const;  // sorted
  long long total_weight() const { return total_weight_; }

 private:
  friend BridgeTree bridge_tree(const Graph& g);
  std::vector<PlayerId> nodes_;
  std::vector<long long> weights_;              // by node index
  std::vector<PlayerId> node_of_player_;        // by player id
  std::vector<std::vector<PlayerId>> adj_;      // by node index, sorted node ids
  std::vector<std::pair<Link, Link>> link_map_; // (tree link, bridge), sorted
  long long total_weight_ = 0;

  int index_of(PlayerId node) const;  // throws on unknown node
};

// Requires g connected.
BridgeTree bridge_tree(const Graph& g);

// Longest node-to-node distance in tree links.
int tree_diameter(const BridgeTree& t);

// Nodes of the unique path between two tree nodes, endpoints included.
std::vector<PlayerId> tree_path(const BridgeTree& t, PlayerId from_node, PlayerId to_node);

enum class PathEnd { First, Last };

// Sum of rel(bridge, x) along the path's bridges, where x is a player in the
// component at the chosen end. The path must be a real path in the tree.
long long path_relevance(const BridgeTree& t, const std::vector<PlayerId>& path, PathEnd end);

}  // namespace anarchy
