#include "graphcodec/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphcodec/instruction.hpp"
#include "graphcodec/rng.hpp"

namespace gcodec {

namespace {

const std::map<std::string, Family> kFamilies = {
    {"path", Family::path},
    {"cycle", Family::cycle},
    {"complete", Family::complete},
    {"star", Family::star},
    {"wheel", Family::wheel},
    {"random_tree", Family::random_tree},
    {"petersen", Family::petersen},
    {"house", Family::house},
    {"barabasi_albert", Family::barabasi_albert},
    {"erdos_renyi", Family::erdos_renyi},
};

Graph with_nodes(int n) {
  Graph g(false);
  for (int i = 0; i < n; ++i) g.add_node();
  return g;
}

Graph make_path(int n) {
  Graph g = with_nodes(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  Graph g = make_path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  Graph g = with_nodes(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_star(int n) {
  Graph g = with_nodes(n);
  for (int leaf = 1; leaf < n; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph make_wheel(int n) {
  if (n < 4) throw ArgumentError("wheel requires n >= 4");
  Graph g = with_nodes(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

Graph make_random_tree(int n, std::uint64_t seed) {
  Graph g = with_nodes(n);
  SplitMix64 rng(seed);
  for (int i = 1; i < n; ++i)
    g.add_edge(static_cast<int>(rng.below(i)), i);
  return g;
}

Graph make_petersen() {
  Graph g = with_nodes(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);         // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    g.add_edge(i, 5 + i);               // spokes
  }
  return g;
}

Graph make_house() {
  Graph g = with_nodes(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  return g;
}

// Seed clique on m nodes, then n-m rounds attaching m edges each with
// degree-proportional target choice; duplicate targets are re-drawn. While
// every degree is still zero (m == 1) the target is uniform.
Graph make_barabasi_albert(int n, int m, std::uint64_t seed) {
  if (m < 1 || m >= n)
    throw ArgumentError("barabasi_albert requires 1 <= m < n");
  Graph g = make_complete(m);
  for (int i = m; i < n; ++i) g.add_node();
  SplitMix64 rng(seed);
  std::vector<int> endpoints;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  for (int fresh = m; fresh < n; ++fresh) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m) {
      int t = endpoints.empty()
                  ? static_cast<int>(rng.below(fresh))
                  : endpoints[rng.below(endpoints.size())];
      targets.insert(t);
    }
    for (int t : targets) {
      g.add_edge(fresh, t);
      endpoints.push_back(fresh);
      endpoints.push_back(t);
    }
  }
  return g;
}

Graph largest_component(const Graph& g) {
  int n = g.node_count();
  std::vector<int> comp(n, -1);
  int comp_count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = comp_count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.out_neighbors(u))
        if (comp[v] < 0) {
          comp[v] = comp_count;
          stack.push_back(v);
        }
    }
    ++comp_count;
  }
  std::vector<int> size(comp_count, 0);
  for (int u = 0; u < n; ++u) ++size[comp[u]];
  // ties go to the component discovered first, i.e. smallest min node id
  int keep = static_cast<int>(std::max_element(size.begin(), size.end()) -
                              size.begin());

  std::vector<int> remap(n, -1);
  Graph out(false);
  for (int u = 0; u < n; ++u)
    if (comp[u] == keep) remap[u] = out.add_node();
  for (int u = 0; u < n; ++u) {
    if (comp[u] != keep) continue;
    for (int v : g.out_neighbors(u))
      if (u < v) out.add_edge(remap[u], remap[v]);
  }
  return out;
}

Graph make_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0))
    throw ArgumentError("erdos_renyi requires 0 < p <= 1");
  Graph g = with_nodes(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  if (g.all_reachable_from(0) && g.node_count() > 0) return g;
  return largest_component(g);
}

} // namespace

Family family_from_name(const std::string& name) {
  auto it = kFamilies.find(name);
  if (it == kFamilies.end())
    throw ArgumentError("unknown graph family '" + name + "'");
  return it->second;
}

std::string family_name(Family f) {
  for (const auto& [name, fam] : kFamilies)
    if (fam == f) return name;
  throw ArgumentError("unknown graph family value");
}

Graph generate(const GraphSpec& spec) {
  if (spec.n < 1) throw ArgumentError("graph size must be at least 1");
  switch (spec.family) {
    case Family::path: return make_path(spec.n);
    case Family::cycle: return make_cycle(spec.n);
    case Family::complete: return make_complete(spec.n);
    case Family::star: return make_star(spec.n);
    case Family::wheel: return make_wheel(spec.n);
    case Family::random_tree: return make_random_tree(spec.n, spec.seed);
    case Family::petersen: return make_petersen();
    case Family::house: return make_house();
    case Family::barabasi_albert:
      return make_barabasi_albert(spec.n, static_cast<int>(spec.param),
                                  spec.seed);
    case Family::erdos_renyi:
      return make_erdos_renyi(spec.n, spec.param, spec.seed);
  }
  throw ArgumentError("unknown graph family value");
}

std::vector<EditedGraph> edit_neighbors_1ged(const Graph& g) {
  if (g.directed())
    throw ArgumentError("edit_neighbors_1ged handles undirected graphs only");
  if (g.node_count() == 0 || !g.all_reachable_from(0))
    throw ArgumentError("edit_neighbors_1ged requires a connected graph");

  int n = g.node_count();
  std::vector<EditedGraph> out;
  for (int u = 0; u < n; ++u) {
    for (int v : g.out_neighbors(u)) {
      if (v < u) continue;
      Graph trimmed(false);
      for (int i = 0; i < n; ++i) trimmed.add_node();
      for (int a = 0; a < n; ++a)
        for (int b : g.out_neighbors(a))
          if (a < b && !(a == u && b == v)) trimmed.add_edge(a, b);
      if (trimmed.all_reachable_from(0))
        out.push_back({std::move(trimmed), false, u, v});
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      Graph grown = g;
      grown.add_edge(u, v);
      out.push_back({std::move(grown), true, u, v});
    }
  }
  return out;
}

std::vector<std::string> string_neighbors_1lev(std::string_view w) {
  validate_instructions(w);
  std::set<std::string> out;
  std::string s(w);
  for (std::size_t i = 0; i < s.size(); ++i)
    out.insert(s.substr(0, i) + s.substr(i + 1));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (char ch : alphabet)
      if (ch != s[i]) {
        std::string sub = s;
        sub[i] = ch;
        out.insert(std::move(sub));
      }
  for (std::size_t i = 0; i <= s.size(); ++i)
    for (char ch : alphabet)
      out.insert(s.substr(0, i) + ch + s.substr(i));
  out.erase(s);
  return std::vector<std::string>(out.begin(), out.end());
}

} // namespace gcodec
