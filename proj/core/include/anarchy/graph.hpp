#pragma once

// Undirected simple graphs over players 1..n. Values are immutable after
// construction; edits return a fresh graph. Adjacency is stored as one bit row
// per player so copies are a single buffer copy and neighbor scans are word
// scans, which is what the exhaustive equilibrium checks lean on.

#include <compare>
#include <cstdint>
#include <vector>

namespace anarchy {

using PlayerId = int;  // valid ids are 1..n

// Undirected link {a, b}, kept with a < b.
struct Link {
  PlayerId a = 0;
  PlayerId b = 0;
  friend auto operator<=>(const Link&, const Link&) = default;
};

// Normalizes endpoint order; rejects loops and ids < 1.
Link make_link(PlayerId v, PlayerId w);

class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<Link>& links);

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_link(PlayerId v, PlayerId w) const;
  int degree(PlayerId v) const;
  std::vector<Link> links() const;               // sorted
  std::vector<PlayerId> neighbors(PlayerId v) const;  // sorted

  // Errors if the link is already there / not there.
  Graph with_link(PlayerId v, PlayerId w) const;
  Graph without_link(PlayerId v, PlayerId w) const;

  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  // Raw row access for scanners; bit w of row v is set iff {v,w} is a link.
  // Rows and bit positions are 1-based, index 0 is unused.
  int words_per_row() const { return words_; }
  const std::uint64_t* row(PlayerId v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  void check_player(PlayerId v) const;  // throws std::out_of_range

 private:
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // (n_+1) rows of words_ each

  void set_bit(PlayerId v, PlayerId w);
  void clear_bit(PlayerId v, PlayerId w);
};

}  // namespace anarchy
