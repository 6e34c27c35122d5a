#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <anarchy/graph.hpp>
#include <oracles.hpp>

using namespace anarchy;

TEST_SUITE_BEGIN("graph");

TEST_CASE("make_link normalizes endpoint order") {
  Link e = make_link(4, 2);
  CHECK(e.a == 2);
  CHECK(e.b == 4);
  CHECK(make_link(2, 4) == e);
  CHECK_THROWS_AS(make_link(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_link(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_link(-2, 5), std::invalid_argument);
}

TEST_CASE("links sort lexicographically") {
  std::vector<Link> v{{2, 3}, {1, 4}, {1, 2}};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Link>{{1, 2}, {1, 4}, {2, 3}});
}

TEST_CASE("graph stores an undirected link set") {
  Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.has_link(1, 2));
  CHECK(g.has_link(2, 1));
  CHECK(!g.has_link(1, 3));
  CHECK(g.degree(2) == 2);
  CHECK(g.degree(4) == 1);
  CHECK(g.links() == std::vector<Link>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(g.neighbors(2) == std::vector<PlayerId>{1, 3});
  CHECK(g.neighbors(1) == std::vector<PlayerId>{2});
}

TEST_CASE("graph constructor rejects malformed link lists") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::out_of_range);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("with_link and without_link copy") {
  Graph g(3, {{1, 2}});
  Graph h = g.with_link(2, 3);
  CHECK(g.m() == 1);
  CHECK(h.m() == 2);
  CHECK(h.has_link(2, 3));
  Graph back = h.without_link(2, 3);
  CHECK(back == g);
  CHECK_THROWS_AS(g.with_link(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.without_link(1, 3), std::invalid_argument);
}

TEST_CASE("connectivity") {
  CHECK(Graph(1).connected());
  CHECK(Graph(4, {{1, 2}, {2, 3}, {3, 4}}).connected());
  CHECK(!Graph(4, {{1, 2}, {3, 4}}).connected());
  CHECK(!Graph(3, {{1, 2}}).connected());
  CHECK(Graph(3, {{1, 2}, {1, 3}}).connected());
}

TEST_CASE("connectivity agrees with the breadth-first oracle") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> pick_n(2, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = pick_n(rng);
    std::vector<Link> links;
    for (PlayerId v = 1; v <= n; ++v) {
      for (PlayerId w = v + 1; w <= n; ++w) {
        if (rng() % 3 == 0) links.push_back(Link{v, w});
      }
    }
    Graph g(n, links);
    CHECK(g.connected() == oracle::connected(g));
  }
}

TEST_CASE("equality compares n and link set") {
  Graph a(3, {{1, 2}});
  Graph b(3, {{1, 2}});
  Graph c(3, {{1, 3}});
  Graph d(4, {{1, 2}});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != d);
}

TEST_SUITE_END();
