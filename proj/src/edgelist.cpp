#include "graphcodec/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace gcodec {

namespace {

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_long(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

struct Line {
  std::size_t number; // 1-based
  std::string_view text;
};

} // namespace

Graph parse_edgelist(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    std::string_view raw = strip(text.substr(pos, eol - pos));
    if (!raw.empty()) lines.push_back({line_no, raw});
    if (eol == text.size()) break;
    pos = eol + 1;
  }

  bool directed = false;
  bool saw_header = false;
  long long announced_nodes = 0;
  std::vector<std::pair<long long, long long>> raw_edges;
  std::unordered_map<long long, int> remap;

  auto intern = [&](long long id) {
    return remap.try_emplace(id, static_cast<int>(remap.size())).first->second;
  };

  for (const Line& line : lines) {
    if (line.text.front() == '#') {
      std::istringstream comment{std::string(line.text.substr(1))};
      std::string word;
      long long count = 0;
      if (comment >> word && word == "nodes" && comment >> count && count > 0)
        announced_nodes = std::max(announced_nodes, count);
      continue;
    }
    if (!saw_header) {
      if (line.text == "undirected") directed = false;
      else if (line.text == "directed") directed = true;
      else
        throw ParseError("line " + std::to_string(line.number) +
                             ": expected 'undirected' or 'directed' header",
                         line.number);
      saw_header = true;
      continue;
    }
    std::size_t gap = line.text.find_first_of(" \t");
    long long u, v;
    if (gap == std::string_view::npos ||
        !parse_long(strip(line.text.substr(0, gap)), u) ||
        !parse_long(strip(line.text.substr(gap)), v))
      throw ParseError("line " + std::to_string(line.number) +
                           ": expected two integer node ids",
                       line.number);
    if (u == v)
      throw ParseError("line " + std::to_string(line.number) +
                           ": self-loop " + std::to_string(u) + " " +
                           std::to_string(v) + " not allowed",
                       line.number);
    raw_edges.emplace_back(u, v);
  }
  if (!saw_header) throw ParseError("missing header line", 1);

  // Keep ids verbatim when they are already 0..N-1 so that parsing the
  // serializer's own output reproduces the graph exactly; otherwise remap
  // by first appearance.
  long long max_id = -1;
  bool contiguous = true;
  std::vector<long long> distinct;
  {
    std::unordered_map<long long, bool> seen;
    for (auto [u, v] : raw_edges)
      for (long long id : {u, v})
        if (seen.try_emplace(id, true).second) {
          distinct.push_back(id);
          if (id < 0) contiguous = false;
          max_id = std::max(max_id, id);
        }
    if (contiguous)
      contiguous = max_id + 1 == static_cast<long long>(distinct.size());
  }

  Graph g(directed);
  if (contiguous) {
    long long nodes = std::max(announced_nodes, max_id + 1);
    for (long long i = 0; i < nodes; ++i) g.add_node();
    for (auto [u, v] : raw_edges)
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
  } else {
    for (auto [u, v] : raw_edges) {
      intern(u);
      intern(v);
    }
    long long nodes =
        std::max(announced_nodes, static_cast<long long>(remap.size()));
    for (long long i = 0; i < nodes; ++i) g.add_node();
    for (auto [u, v] : raw_edges) g.add_edge(remap[u], remap[v]);
  }
  return g;
}

std::string serialize_edgelist(const Graph& g) {
  std::string out = g.directed() ? "directed\n" : "undirected\n";
  bool uncovered = false;
  for (int u = 0; u < g.node_count() && !uncovered; ++u)
    uncovered = g.out_degree(u) == 0 && g.in_degree(u) == 0;
  if (uncovered)
    out += "# nodes " + std::to_string(g.node_count()) + "\n";
  for (int u = 0; u < g.node_count(); ++u)
    for (int v : g.out_neighbors(u)) {
      if (!g.directed() && v < u) continue;
      out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  return out;
}

Graph load_edgelist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edgelist(buf.str());
}

void save_edgelist(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << serialize_edgelist(g);
  if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace gcodec
