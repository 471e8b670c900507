#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphcodec/graph.hpp"

namespace gcodec {

enum class Family {
  path,
  cycle,
  complete,
  star,
  wheel,
  random_tree,
  petersen,
  house,
  barabasi_albert,
  erdos_renyi,
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Deterministic recipe for one synthetic graph. param carries the
// attachment count m for barabasi_albert and the edge probability p for
// erdos_renyi; the other families ignore it. petersen and house have
// fixed shapes and ignore n as well.
struct GraphSpec {
  Family family = Family::path;
  int n = 1;
  double param = 0.0;
  std::uint64_t seed = 0;
};

// Builds the graph: always connected and simple, identical for identical
// specs on every platform. An Erdos-Renyi sample that comes out
// disconnected is reduced to its largest component, so the result may have
// fewer than n nodes.
Graph generate(const GraphSpec& spec);

// One single-edge edit of g that keeps it connected.
struct EditedGraph {
  Graph graph;
  bool inserted = false; // false = deletion
  int u = 0;
  int v = 0;
};

// Every connectivity-preserving single edge edit: non-bridge deletions
// first, then insertions, each ordered by endpoint pair.
std::vector<EditedGraph> edit_neighbors_1ged(const Graph& g);

// All strings at Levenshtein distance exactly 1 from w (single character
// deletions, substitutions, and insertions), deduplicated and sorted;
// w itself is excluded.
std::vector<std::string> string_neighbors_1lev(std::string_view w);

} // namespace gcodec
