#pragma once

#include <string>
#include <string_view>

#include "graphcodec/graph.hpp"

namespace gcodec {

// Plain-text graph interchange format:
//
//   undirected            <- header, or "directed"
//   # nodes 5             <- optional, pads nodes edges do not cover
//   0 1                   <- one edge per line, single space, LF endings
//   1 2
//
// "#" starts a comment anywhere. Node ids in the input may be arbitrary
// integers; when they are not already 0..N-1 the parser remaps them to
// that range in order of first appearance. Duplicate edge lines collapse
// silently; self-loop lines are rejected.
Graph parse_edgelist(std::string_view text);

// Canonical text for g: header, "# nodes N" when some node has no edges,
// then edges ascending by (min,max) endpoints (undirected) or (src,dst)
// (directed). parse_edgelist(serialize_edgelist(g)) == g.
std::string serialize_edgelist(const Graph& g);

Graph load_edgelist(const std::string& path);
void save_edgelist(const Graph& g, const std::string& path);

} // namespace gcodec
