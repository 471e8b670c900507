#pragma once

#include "graphcodec/graph.hpp"

namespace gcodec {

// Uniform edit-cost scheme: node insert/delete 1, edge insert/delete 1,
// node substitution 0 (unlabeled nodes are interchangeable).
struct GedCosts {
  static constexpr int node_insert = 1;
  static constexpr int node_delete = 1;
  static constexpr int node_substitute = 0;
  static constexpr int edge_insert = 1;
  static constexpr int edge_delete = 1;
};

// Exact graph edit distance under GedCosts by brute force over injective
// node mappings of the smaller graph into the larger. Undirected graphs
// only; throws ResourceError when either graph exceeds size_cap nodes.
// Zero exactly when the graphs are isomorphic.
int ged_exact(const Graph& g, const Graph& h, int size_cap = 8);

// Exact isomorphism test: node/edge-count and degree-sequence rejection,
// then backtracking permutation search with adjacency-consistency pruning.
// Handles directed graphs (directions must match). Throws ResourceError
// past size_cap nodes.
bool is_isomorphic(const Graph& g, const Graph& h, int size_cap = 10);

} // namespace gcodec
