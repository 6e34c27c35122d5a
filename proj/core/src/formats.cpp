#include "anarchy/formats.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "anarchy/bridge.hpp"

namespace anarchy {
namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      out = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " (line " + std::to_string(line_no) + ")");
  }
};

// "v w" with nothing after
std::pair<int, int> parse_pair(LineReader& r, const std::string& text) {
  std::istringstream iss(text);
  int a = 0, b = 0;
  std::string extra;
  if (!(iss >> a >> b)) r.fail("expected two player ids");
  if (iss >> extra) r.fail("trailing token '" + extra + "'");
  return {a, b};
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

int parse_int(const std::string& text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("'" + text + "' is not an integer");
  return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("empty input, expected 'graph <n> <m>'");
  std::istringstream head(line);
  std::string tag;
  int n = 0, m = 0;
  std::string extra;
  if (!(head >> tag >> n >> m) || tag != "graph" || (head >> extra))
    r.fail("expected 'graph <n> <m>'");
  if (n < 1) r.fail("need at least one player");
  if (m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
    r.fail("impossible link count");

  std::vector<Link> links;
  std::set<Link> seen;
  for (int i = 0; i < m; ++i) {
    if (!r.next(line)) r.fail("expected " + std::to_string(m) + " links, got " + std::to_string(i));
    const auto [a, b] = parse_pair(r, line);
    Link e;
    try {
      e = make_link(a, b);
    } catch (const std::exception& ex) {
      r.fail(ex.what());
    }
    if (e.b > n) r.fail("player id beyond n");
    if (!seen.insert(e).second) r.fail("duplicate link");
    links.push_back(e);
  }
  if (r.next(line)) r.fail("trailing content");
  return Graph(n, links);
}

Graph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.n() << ' ' << g.m() << '\n';
  for (const Link& e : g.links()) out << e.a << ' ' << e.b << '\n';
}

StrategyProfile read_profile(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("empty input, expected 'profile <n>'");
  std::istringstream head(line);
  std::string tag, extra;
  int n = 0;
  if (!(head >> tag >> n) || tag != "profile" || (head >> extra))
    r.fail("expected 'profile <n>'");

  try {
    StrategyProfile s(n);
    while (r.next(line)) {
      const auto [v, w] = parse_pair(r, line);
      if (v < 1 || v > n || w < 1 || w > n) r.fail("player id out of range");
      if (v == w) r.fail("self request");
      if (s.requests(v, w)) r.fail("duplicate request");
      s = s.with_request(v, w, true);
    }
    return s;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& ex) {
    r.fail(ex.what());
  }
}

StrategyProfile read_profile_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_profile(in);
}

void write_profile(std::ostream& out, const StrategyProfile& s) {
  out << "profile " << s.n() << '\n';
  for (PlayerId v = 1; v <= s.n(); ++v)
    for (PlayerId w = 1; w <= s.n(); ++w)
      if (s.requests(v, w)) out << v << ' ' << w << '\n';
}

CustomTable read_custom_table(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("custom table: ") + ex.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("custom table: expected a JSON object of \"a-b\" keys");

  CustomTable table;
  for (const auto& [key, value] : j.items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
      throw std::invalid_argument("custom table: key '" + key + "' is not of the form a-b");
    Link e;
    try {
      e = make_link(parse_int(key.substr(0, dash)), parse_int(key.substr(dash + 1)));
    } catch (const std::exception& ex) {
      throw std::invalid_argument("custom table: key '" + key + "': " + ex.what());
    }
    if (!value.is_string())
      throw std::invalid_argument("custom table: value for '" + key +
                                  "' must be a rational in a string");
    const Rat p = parse_rat(value.get<std::string>());
    if (p < 0)
      throw std::invalid_argument("custom table: negative probability for '" + key + "'");
    if (!table.prob.emplace(e, p).second)
      throw std::invalid_argument("custom table: link " + std::to_string(e.a) + "-" +
                                  std::to_string(e.b) + " appears twice");
  }
  return table;
}

CustomTable read_custom_table_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_custom_table(in);
}

std::string dot_graph(const Graph& g) {
  std::set<Link> bridge_set, critical_set;
  const bool annotated = g.connected() && g.m() > 0;
  if (annotated) {
    for (const Link& e : bridges(g)) bridge_set.insert(e);
    for (const Link& e : critical_links(g).links) critical_set.insert(e);
  }

  std::ostringstream os;
  os << "graph G {\n";
  for (PlayerId v = 1; v <= g.n(); ++v) os << "  " << v << ";\n";
  for (const Link& e : g.links()) {
    os << "  " << e.a << " -- " << e.b;
    std::vector<std::string> attrs;
    if (bridge_set.count(e)) {
      attrs.push_back("color=crimson");
      attrs.push_back("label=\"" + std::to_string(separation(g, e).sep) + "\"");
    }
    if (critical_set.count(e)) attrs.push_back("style=bold");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) os << ", ";
        os << attrs[i];
      }
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace anarchy
