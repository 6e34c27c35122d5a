#include "anarchy/bridge.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

#include "scratch.hpp"

namespace anarchy {

namespace {

std::string link_text(const Link& e) {
  return std::to_string(e.a) + "-" + std::to_string(e.b);
}

void require_connected(const detail::Scratch& scr) {
  if (!scr.connected) throw std::invalid_argument("graph is disconnected");
}

void require_link(const Graph& g, const Link& e) {
  if (e.a >= e.b || e.a < 1 || e.b > g.n() || !g.has_link(e.a, e.b)) {
    throw std::invalid_argument("not a link of the graph: " + link_text(e));
  }
}

const detail::BridgeEdge* find_bridge(const detail::Scratch& scr, const Link& e) {
  for (const detail::BridgeEdge& b : scr.bridges) {
    const Link as_link = b.parent < b.child ? Link{b.parent, b.child} : Link{b.child, b.parent};
    if (as_link == e) return &b;
  }
  return nullptr;
}

// Components left after deleting all bridges, labelled by smallest member.
std::vector<PlayerId> twoec_component_ids(const Graph& g, const detail::Scratch& scr) {
  const int n = g.n();
  std::vector<Link> bridge_links;
  bridge_links.reserve(scr.bridges.size());
  for (const detail::BridgeEdge& b : scr.bridges) {
    bridge_links.push_back(b.parent < b.child ? Link{b.parent, b.child}
                                              : Link{b.child, b.parent});
  }
  std::sort(bridge_links.begin(), bridge_links.end());
  const auto is_bridge = [&](PlayerId v, PlayerId w) {
    const Link e = v < w ? Link{v, w} : Link{w, v};
    return std::binary_search(bridge_links.begin(), bridge_links.end(), e);
  };
  std::vector<PlayerId> comp(n + 1, 0);
  for (PlayerId start = 1; start <= n; ++start) {
    if (comp[start]) continue;
    comp[start] = start;  // start is minimal: smaller ids are already labelled
    std::vector<PlayerId> stack{start};
    while (!stack.empty()) {
      const PlayerId v = stack.back();
      stack.pop_back();
      for (PlayerId w : g.neighbors(v)) {
        if (comp[w] || is_bridge(v, w)) continue;
        comp[w] = start;
        stack.push_back(w);
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<Link> bridges(const Graph& g) {
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);
  std::vector<Link> out;
  out.reserve(scr.bridges.size());
  for (const detail::BridgeEdge& b : scr.bridges) {
    out.push_back(b.parent < b.child ? Link{b.parent, b.child} : Link{b.child, b.parent});
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long relevance(const Graph& g, Link e, PlayerId v) {
  g.check_player(v);
  require_link(g, e);
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);
  const detail::BridgeEdge* b = find_bridge(scr, e);
  return b ? scr.rel(*b, v) : 0;
}

long long relevance_naive(const Graph& g, Link e, PlayerId v) {
  g.check_player(v);
  require_link(g, e);
  if (!g.connected()) throw std::invalid_argument("graph is disconnected");
  // plain adjacency lists and a queue; shares nothing with the DFS route
  const int n = g.n();
  std::vector<std::vector<PlayerId>> adj(n + 1);
  for (const Link& l : g.links()) {
    if (l == e) continue;
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<char> seen(n + 1, 0);
  std::queue<PlayerId> queue;
  queue.push(v);
  seen[v] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const PlayerId x = queue.front();
    queue.pop();
    for (PlayerId y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      ++reached;
      queue.push(y);
    }
  }
  return n - reached;
}

long long relevance_sum(const Graph& g, PlayerId v) {
  g.check_player(v);
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);
  return scr.rel_sum(v);
}

Separation separation(const Graph& g, Link e) {
  require_link(g, e);
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);
  const detail::BridgeEdge* b = find_bridge(scr, e);
  if (!b) return Separation{0, 0};
  const long long side = std::min(b->size, scr.n - b->size);
  return Separation{side, 2 * side * (scr.n - side)};
}

long long total_separation(const Graph& g) {
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);
  return scr.total_separation();
}

bool is_chord(const Graph& g, Link e) {
  require_link(g, e);
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);
  if (find_bridge(scr, e)) return false;
  const Graph cut = g.without_link(e.a, e.b);
  detail::Scratch scr2;
  scr2.load(cut);
  scr2.scan();
  const auto comp = twoec_component_ids(cut, scr2);
  return comp[e.a] == comp[e.b];
}

bool chord_free(const Graph& g) {
  for (const Link& e : g.links()) {
    if (is_chord(g, e)) return false;
  }
  return true;
}

long long BridgeTree::weight(PlayerId node) const { return weights_[index_of(node)]; }

PlayerId BridgeTree::node_of(PlayerId player) const {
  if (player < 1 || player >= static_cast<PlayerId>(node_of_player_.size())) {
    throw std::out_of_range("player " + std::to_string(player) + " out of range");
  }
  return node_of_player_[player];
}

std::vector<Link> BridgeTree::tree_links() const {
  std::vector<Link> out;
  out.reserve(link_map_.size());
  for (const auto& [tl, br] : link_map_) out.push_back(tl);
  return out;
}

Link BridgeTree::bridge_of(const Link& tree_link) const {
  for (const auto& [tl, br] : link_map_) {
    if (tl == tree_link) return br;
  }
  throw std::invalid_argument("not a tree link: " + link_text(tree_link));
}

std::vector<PlayerId> BridgeTree::tree_neighbors(PlayerId node) const {
  return adj_[index_of(node)];
}

int BridgeTree::index_of(PlayerId node) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) {
    throw std::invalid_argument("not a tree node: " + std::to_string(node));
  }
  return static_cast<int>(it - nodes_.begin());
}

BridgeTree bridge_tree(const Graph& g) {
  detail::Scratch scr;
  scr.load(g);
  scr.scan();
  require_connected(scr);

  BridgeTree t;
  const auto comp = twoec_component_ids(g, scr);
  t.node_of_player_ = comp;
  std::map<PlayerId, long long> weight_by_node;
  for (PlayerId v = 1; v <= g.n(); ++v) weight_by_node[comp[v]] += 1;
  for (const auto& [node, w] : weight_by_node) {
    t.nodes_.push_back(node);
    t.weights_.push_back(w);
    t.total_weight_ += w;
  }
  t.adj_.resize(t.nodes_.size());
  for (const detail::BridgeEdge& b : scr.bridges) {
    const PlayerId x = comp[b.parent];
    const PlayerId y = comp[b.child];
    const Link tree_link = x < y ? Link{x, y} : Link{y, x};
    const Link orig = b.parent < b.child ? Link{b.parent, b.child} : Link{b.child, b.parent};
    t.link_map_.emplace_back(tree_link, orig);
    t.adj_[t.index_of(x)].push_back(y);
    t.adj_[t.index_of(y)].push_back(x);
  }
  std::sort(t.link_map_.begin(), t.link_map_.end());
  for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

namespace {

// breadth-first distances in tree links; parents for path reconstruction
void tree_bfs(const BridgeTree& t, PlayerId start, std::map<PlayerId, int>& dist,
              std::map<PlayerId, PlayerId>& parent) {
  dist.clear();
  parent.clear();
  dist[start] = 0;
  std::queue<PlayerId> queue;
  queue.push(start);
  while (!queue.empty()) {
    const PlayerId x = queue.front();
    queue.pop();
    for (PlayerId y : t.tree_neighbors(x)) {
      if (dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      parent[y] = x;
      queue.push(y);
    }
  }
}

}  // namespace

int tree_diameter(const BridgeTree& t) {
  if (t.node_count() <= 1) return 0;
  std::map<PlayerId, int> dist;
  std::map<PlayerId, PlayerId> parent;
  tree_bfs(t, t.nodes().front(), dist, parent);
  PlayerId far = t.nodes().front();
  for (const auto& [node, d] : dist) {
    if (d > dist[far]) far = node;
  }
  tree_bfs(t, far, dist, parent);
  int best = 0;
  for (const auto& [node, d] : dist) best = std::max(best, d);
  return best;
}

std::vector<PlayerId> tree_path(const BridgeTree& t, PlayerId from_node, PlayerId to_node) {
  t.weight(from_node);  // validates both are nodes
  t.weight(to_node);
  std::map<PlayerId, int> dist;
  std::map<PlayerId, PlayerId> parent;
  tree_bfs(t, from_node, dist, parent);
  std::vector<PlayerId> path{to_node};
  while (path.back() != from_node) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

long long path_relevance(const BridgeTree& t, const std::vector<PlayerId>& path, PathEnd end) {
  if (path.empty()) throw std::invalid_argument("empty tree path");
  for (std::size_t i = 0; i < path.size(); ++i) {
    t.weight(path[i]);  // validates node
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (path[i] == path[j]) throw std::invalid_argument("tree path repeats a node");
    }
  }
  long long total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto nbrs = t.tree_neighbors(path[i]);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), path[i + 1])) {
      throw std::invalid_argument("not a tree path: " + std::to_string(path[i]) +
                                  " and " + std::to_string(path[i + 1]) +
                                  " are not adjacent");
    }
    // weight of the side away from the chosen end once this tree link is cut
    const PlayerId near = end == PathEnd::First ? path[i] : path[i + 1];
    const PlayerId other = end == PathEnd::First ? path[i + 1] : path[i];
    // walk from `near` without crossing the cut link
    long long near_side = 0;
    std::map<PlayerId, char> seen;
    std::vector<PlayerId> stack{near};
    seen[near] = 1;
    while (!stack.empty()) {
      const PlayerId x = stack.back();
      stack.pop_back();
      near_side += t.weight(x);
      for (PlayerId y : t.tree_neighbors(x)) {
        if (seen.count(y)) continue;
        if (x == near && y == other) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    total += t.total_weight() - near_side;
  }
  return total;
}

}  // namespace anarchy
