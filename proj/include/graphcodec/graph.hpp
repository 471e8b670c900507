#pragma once

#include <set>
#include <string>
#include <vector>

#include "graphcodec/error.hpp"

namespace gcodec {

// Finite simple graph with contiguous integer node ids.
//
// Undirected graphs keep the adjacency symmetric. Directed graphs store
// out-neighbors in the main adjacency and maintain in-neighbor sets on the
// side. Neighbor sets are ordered, so every scan over them is
// deterministic.
class Graph {
public:
  explicit Graph(bool directed = false) : directed_(directed) {}

  bool directed() const { return directed_; }
  int node_count() const { return static_cast<int>(adj_.size()); }

  // Number of directed edges, or of undirected pairs.
  std::size_t edge_count() const { return edge_count_; }

  // Appends a node and returns its id; ids are handed out contiguously.
  int add_node();

  // Inserts edge (u,v), both directions when undirected. Self-loops and
  // duplicates are silently discarded so that any instruction sequence
  // leaves the graph simple. Returns whether the edge set changed.
  bool add_edge(int u, int v);

  bool has_edge(int u, int v) const;

  // Out-neighbors of u in ascending id order (== neighbors when undirected).
  const std::set<int>& out_neighbors(int u) const;
  const std::set<int>& in_neighbors(int u) const;

  std::vector<int> neighbors_sorted(int u) const;

  int out_degree(int u) const;
  int in_degree(int u) const;

  // True iff every node is reachable from v0 along outgoing edges.
  bool all_reachable_from(int v0) const;

  // Smallest node id unreachable from v0, or -1 when all are reachable.
  int first_unreachable_from(int v0) const;

  // Copy with node u renamed to perm[u]; perm must be a permutation.
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph& other) const = default;

private:
  void check_node(int u) const;

  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::set<int>> adj_;
  std::vector<std::set<int>> in_; // maintained only when directed
};

// Structural sanity check used by tests and the decoder validity suite.
// On failure returns false and, when why is given, names the violation.
bool check_graph_invariants(const Graph& g, std::string* why = nullptr);

} // namespace gcodec
