#include "anarchy/fixtures.hpp"

#include <stdexcept>
#include <vector>

namespace anarchy {

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Link> links;
  for (int v = 1; v < n; ++v) links.push_back(Link{v, v + 1});
  links.push_back(Link{1, n});
  return Graph(n, links);
}

Graph make_star(int n) {
  if (n < 3) throw std::invalid_argument("star needs n >= 3");
  std::vector<Link> links;
  for (int v = 2; v <= n; ++v) links.push_back(Link{1, v});
  return Graph(n, links);
}

Graph make_three_stars(int n0) {
  if (n0 < 3) throw std::invalid_argument("three_stars needs n0 >= 3");
  const int n = 3 * n0 - 2;
  std::vector<Link> links;
  int next = 2;
  for (int star = 0; star < 3; ++star) {
    const int center = next++;
    links.push_back(Link{1, center});
    const int leaves = n0 - 1 - star;  // star sizes n0, n0-1, n0-2
    for (int leaf = 0; leaf < leaves; ++leaf) links.push_back(Link{center, next++});
  }
  if (next != n + 1) throw std::logic_error("three_stars numbering is off");
  return Graph(n, links);
}

Graph make_cycle_with_path(int n, int len) {
  if (len < 1) throw std::invalid_argument("cycle_with_path needs len >= 1");
  if (n < len + 3) throw std::invalid_argument("cycle_with_path needs n >= len + 3");
  const int cycle = n - len;
  std::vector<Link> links;
  for (int v = 1; v < cycle; ++v) links.push_back(Link{v, v + 1});
  links.push_back(Link{1, cycle});
  int prev = 1;
  for (int v = cycle + 1; v <= n; ++v) {
    links.push_back(prev < v ? Link{prev, v} : Link{v, prev});
    prev = v;
  }
  return Graph(n, links);
}

Graph make_bridge_showcase() {
  // players: 1-4 square block, 5 lone cut vertex, 6-12 seven-vertex block,
  // 13 pendant off 6, 14-15 pendant path off 4, 16-18 triangle off 10,
  // 19-22 pendant path off 8
  const std::vector<Link> links = {
      {1, 2},   {2, 3},   {3, 4},   {1, 4},    // square
      {1, 5},   {5, 11},                       // bridges through the cut vertex
      {6, 7},   {7, 8},   {8, 9},   {9, 10},   // block 6..12: outer cycle
      {10, 11}, {6, 11},                       //   6-7-8-9-10-11-6
      {7, 12},  {10, 12},                      //   with a 7-12-10 shortcut
      {6, 13},                                 // pendant
      {4, 14},  {14, 15},                      // pendant path
      {10, 16}, {16, 17}, {17, 18}, {16, 18},  // triangle
      {8, 19},  {19, 20}, {20, 21}, {21, 22},  // pendant path
  };
  return Graph(22, links);
}

StrategyProfile make_directed_cycle_profile(int n) {
  if (n < 3) throw std::invalid_argument("directed_cycle_profile needs n >= 3");
  StrategyProfile s(n);
  for (int v = 1; v < n; ++v) s = s.with_request(v, v + 1, true);
  return s.with_request(n, 1, true);
}

StrategyProfile make_star_outward_profile(int n) {
  if (n < 3) throw std::invalid_argument("star_outward_profile needs n >= 3");
  StrategyProfile s(n);
  for (int v = 2; v <= n; ++v) s = s.with_request(1, v, true);
  return s;
}

std::variant<Graph, StrategyProfile> make_fixture(const std::string& text) {
  std::string name = text;
  std::vector<long> args;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string piece = rest.substr(0, comma);
      try {
        std::size_t used = 0;
        args.push_back(std::stol(piece, &used));
        if (used != piece.size()) throw std::invalid_argument(piece);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad fixture parameter \"" + piece + "\" in \"" +
                                    text + "\"");
      }
      if (comma == std::string::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  const auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("fixture " + name + " takes " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "cycle") {
    want(1);
    return make_cycle(static_cast<int>(args[0]));
  }
  if (name == "star") {
    want(1);
    return make_star(static_cast<int>(args[0]));
  }
  if (name == "three_stars") {
    want(1);
    return make_three_stars(static_cast<int>(args[0]));
  }
  if (name == "cycle_with_path") {
    want(2);
    return make_cycle_with_path(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (name == "bridge_showcase") {
    want(0);
    return make_bridge_showcase();
  }
  if (name == "directed_cycle_profile") {
    want(1);
    return make_directed_cycle_profile(static_cast<int>(args[0]));
  }
  if (name == "star_outward_profile") {
    want(1);
    return make_star_outward_profile(static_cast<int>(args[0]));
  }
  throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

BoundConstants bound_constants(int n) {
  if (n < 2) throw std::invalid_argument("bound_constants needs n >= 2");
  const Rat ratio = Rat(n, n - 1);  // 1 + 1/(n-1)
  return BoundConstants{4, ratio * ratio / 8};
}

}  // namespace anarchy
