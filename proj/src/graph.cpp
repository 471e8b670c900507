#include "graphcodec/graph.hpp"

#include <algorithm>
#include <queue>

namespace gcodec {

void Graph::check_node(int u) const {
  if (u < 0 || u >= node_count())
    throw ArgumentError("node id " + std::to_string(u) +
                        " out of range [0, " + std::to_string(node_count()) +
                        ")");
}

int Graph::add_node() {
  adj_.emplace_back();
  if (directed_) in_.emplace_back();
  return node_count() - 1;
}

bool Graph::add_edge(int u, int v) {
  check_node(u);
  check_node(v);
  if (u == v) return false;
  if (!adj_[u].insert(v).second) return false;
  if (directed_) {
    in_[v].insert(u);
  } else {
    adj_[v].insert(u);
  }
  ++edge_count_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  return adj_[u].count(v) > 0;
}

const std::set<int>& Graph::out_neighbors(int u) const {
  check_node(u);
  return adj_[u];
}

const std::set<int>& Graph::in_neighbors(int u) const {
  check_node(u);
  return directed_ ? in_[u] : adj_[u];
}

std::vector<int> Graph::neighbors_sorted(int u) const {
  const auto& s = out_neighbors(u);
  return std::vector<int>(s.begin(), s.end());
}

int Graph::out_degree(int u) const {
  return static_cast<int>(out_neighbors(u).size());
}

int Graph::in_degree(int u) const {
  return static_cast<int>(in_neighbors(u).size());
}

int Graph::first_unreachable_from(int v0) const {
  check_node(v0);
  std::vector<char> seen(node_count(), 0);
  std::queue<int> todo;
  seen[v0] = 1;
  todo.push(v0);
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        todo.push(w);
      }
    }
  }
  for (int u = 0; u < node_count(); ++u)
    if (!seen[u]) return u;
  return -1;
}

bool Graph::all_reachable_from(int v0) const {
  return first_unreachable_from(v0) < 0;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != node_count())
    throw ArgumentError("permutation size does not match node count");
  Graph out(directed_);
  for (int u = 0; u < node_count(); ++u) out.add_node();
  for (int u = 0; u < node_count(); ++u)
    for (int v : adj_[u]) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

} // namespace

bool check_graph_invariants(const Graph& g, std::string* why) {
  std::size_t arcs = 0;
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.out_neighbors(u)) {
      if (v < 0 || v >= g.node_count())
        return fail(why, "neighbor id out of range");
      if (v == u) return fail(why, "self-loop at node " + std::to_string(u));
      if (!g.directed() && !g.out_neighbors(v).count(u))
        return fail(why, "asymmetric undirected edge (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
      ++arcs;
    }
  }
  std::size_t expected = g.directed() ? g.edge_count() : 2 * g.edge_count();
  if (arcs != expected) return fail(why, "edge count out of sync");
  return true;
}

} // namespace gcodec
