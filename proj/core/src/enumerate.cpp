#include "anarchy/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace anarchy {

namespace {

constexpr int kMaxEnumN = 8;

void check_enum_n(int n) {
  if (n < 1 || n > kMaxEnumN) {
    throw std::invalid_argument("graph enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumN) + ", got " + std::to_string(n));
  }
}

int pair_count(int n) { return n * (n - 1) / 2; }

// bit index of pair (i, j), 0-based, i < j < n
int pair_index(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// 0-based adjacency rows from a mask
void rows_from_mask(int n, std::uint64_t mask, std::uint32_t rows[8]) {
  for (int i = 0; i < n; ++i) rows[i] = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) {
        rows[i] |= std::uint32_t{1} << j;
        rows[j] |= std::uint32_t{1} << i;
      }
    }
  }
}

}  // namespace

std::vector<Link> pair_order(int n) {
  std::vector<Link> out;
  out.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(Link{i, j});
  }
  return out;
}

std::uint64_t graph_mask(const Graph& g) {
  check_enum_n(g.n());
  std::uint64_t mask = 0;
  for (const Link& e : g.links()) {
    mask |= std::uint64_t{1} << pair_index(g.n(), e.a - 1, e.b - 1);
  }
  return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  check_enum_n(n);
  if (pair_count(n) < 64 && mask >> pair_count(n)) {
    throw std::invalid_argument("mask has bits beyond the last vertex pair");
  }
  std::vector<Link> links;
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if ((mask >> bit) & 1) links.push_back(Link{i, j});
    }
  }
  return Graph(n, links);
}

bool mask_connected(int n, std::uint64_t mask) {
  check_enum_n(n);
  std::uint32_t rows[8];
  rows_from_mask(n, mask, rows);
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  check_enum_n(n);
  const std::uint64_t top = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (mask_connected(n, mask)) fn(graph_from_mask(n, mask));
  }
}

namespace {

// Refined degree classes: start from degrees, twice replace each color by the
// rank of (color, sorted neighbor colors). Isomorphism-invariant.
void refine_colors(int n, const std::uint32_t rows[8], int color[8]) {
  for (int v = 0; v < n; ++v) color[v] = std::popcount(rows[v]);
  for (int round = 0; round < 2; ++round) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::uint32_t w = rows[v];
      std::vector<int> nbr;
      while (w) {
        nbr.push_back(color[std::countr_zero(w)]);
        w &= w - 1;
      }
      std::sort(nbr.begin(), nbr.end());
      key.insert(key.end(), nbr.begin(), nbr.end());
      keys[v] = {key, v};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::vector<int>, int> rank;
    for (const auto& [key, v] : sorted) {
      rank.emplace(key, static_cast<int>(rank.size()));
    }
    for (int v = 0; v < n; ++v) color[v] = rank.at(keys[v].first);
  }
}

struct CanonSearch {
  int n = 0;
  const std::uint32_t* rows = nullptr;
  // one spare slot so the optimizer's unrolled tail never reads out of bounds
  int class_of_position[9] = {};
  int color[9] = {};
  int assigned[9] = {};        // position -> vertex
  std::uint32_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};
  std::uint64_t partial = 0;
  int total_bits = 0;

  // bits so far for positions 0..k; visit order is (0,1),(0,2),(1,2),(0,3)...
  void run(int k, int bits_placed) {
    if (k == n) {
      if (partial < best) best = partial;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      if (color[v] != class_of_position[k]) continue;
      std::uint64_t chunk = 0;
      const int kp = k < 8 ? k : 8;  // k < n <= 8 here; literal bound for the unroller
      for (int p = 0; p < kp; ++p) {
        chunk = (chunk << 1) | ((rows[assigned[p]] >> v) & 1);
      }
      const int new_bits = bits_placed + k;
      const std::uint64_t candidate = (partial << k) | chunk;
      // compare against the same-length prefix of best
      if (best != ~std::uint64_t{0} && candidate > (best >> (total_bits - new_bits))) {
        continue;
      }
      const std::uint64_t saved = partial;
      partial = candidate;
      assigned[k] = v;
      used |= std::uint32_t{1} << v;
      run(k + 1, new_bits);
      used &= ~(std::uint32_t{1} << v);
      partial = saved;
    }
  }
};

}  // namespace

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  check_enum_n(n);
  if (n == 1) return 0;
  std::uint32_t rows[8];
  rows_from_mask(n, mask, rows);
  CanonSearch search;
  search.n = n;
  search.rows = rows;
  search.total_bits = pair_count(n);
  refine_colors(n, rows, search.color);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return search.color[a] < search.color[b]; });
  for (int k = 0; k < n; ++k) search.class_of_position[k] = search.color[order[k]];
  search.run(0, 0);

  // best holds position-pair bits in visit order (k outer, p inner, msb
  // first); translate back into the pair-order mask encoding
  std::uint64_t out = 0;
  int shift = search.total_bits;
  for (int k = 1; k < n; ++k) {
    for (int p = 0; p < k; ++p) {
      --shift;
      if ((search.best >> shift) & 1) out |= std::uint64_t{1} << pair_index(n, p, k);
    }
  }
  return out;
}

namespace {

std::vector<std::uint64_t> all_class_reps(int n) {
  if (n == 1) return {0};
  const auto prev = all_class_reps(n - 1);
  std::vector<std::uint64_t> reps;
  for (const std::uint64_t base : prev) {
    for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (n - 1)); ++nb) {
      // vertex n-1 (0-based) attached to neighborhood nb of the base graph
      std::uint64_t mask = 0;
      int bit = 0;
      for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n - 1; ++j, ++bit) {
          if ((base >> bit) & 1) mask |= std::uint64_t{1} << pair_index(n, i, j);
        }
      }
      for (int i = 0; i < n - 1; ++i) {
        if ((nb >> i) & 1) mask |= std::uint64_t{1} << pair_index(n, i, n - 1);
      }
      reps.push_back(canonical_mask(n, mask));
    }
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace

const std::vector<std::uint64_t>& connected_class_reps(int n) {
  check_enum_n(n);
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> connected;
  for (const std::uint64_t rep : all_class_reps(n)) {
    if (mask_connected(n, rep)) connected.push_back(rep);
  }
  return cache.emplace(n, std::move(connected)).first->second;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_link_prob) {
  if (n < 2) throw std::invalid_argument("random graph needs n >= 2");
  std::vector<Link> links;
  std::vector<char> present(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  const auto add = [&](int v, int w) {
    if (v > w) std::swap(v, w);
    if (present[static_cast<std::size_t>(v) * (n + 1) + w]) return;
    present[static_cast<std::size_t>(v) * (n + 1) + w] = 1;
    links.push_back(Link{v, w});
  };
  if (n == 2) {
    add(1, 2);
  } else {
    // uniform random tree from its code sequence
    std::uniform_int_distribution<int> vertex(1, n);
    std::vector<int> code(n - 2);
    for (int& c : code) c = vertex(rng);
    std::vector<int> degree(n + 1, 1);
    for (int c : code) ++degree[c];
    std::vector<char> done(n + 1, 0);
    for (int c : code) {
      for (int leaf = 1; leaf <= n; ++leaf) {
        if (degree[leaf] == 1 && !done[leaf]) {
          add(leaf, c);
          done[leaf] = 1;
          --degree[c];
          break;
        }
      }
    }
    int u = 0, v = 0;
    for (int x = 1; x <= n; ++x) {
      if (degree[x] == 1 && !done[x]) {
        if (!u) {
          u = x;
        } else {
          v = x;
        }
      }
    }
    add(u, v);
  }
  std::bernoulli_distribution extra(extra_link_prob);
  for (int v = 1; v <= n; ++v) {
    for (int w = v + 1; w <= n; ++w) {
      if (!present[static_cast<std::size_t>(v) * (n + 1) + w] && extra(rng)) add(v, w);
    }
  }
  std::sort(links.begin(), links.end());
  return Graph(n, links);
}

int resolve_threads(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* cap_text = std::getenv("ANARCHY_LAB_THREADS")) {
    const int cap = std::atoi(cap_text);
    if (cap >= 1 && cap < threads) threads = cap;
  }
  return threads;
}

}  // namespace anarchy
