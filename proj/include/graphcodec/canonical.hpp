#pragma once

#include <set>
#include <string>

#include "graphcodec/encoder.hpp"

namespace gcodec {

struct CanonicalOptions {
  // Search nodes (committed operations) before the search fails loudly.
  long long node_budget = 100'000'000;
  // Wall-clock limit in seconds; 0 disables it.
  double time_limit = 0.0;
  // Default search branches on the starting node and on the neighbor
  // brought in at each V/v commit. Strict mode additionally branches over
  // every applicable (pair, operation) combination; it explores a far
  // larger space and is only practical for very small graphs.
  bool strict = false;
  // Branch-and-bound on partial length; disabling it never changes the
  // result, only the cost of finding it.
  bool prune = true;
};

struct CanonicalResult {
  std::string w_star;
  std::size_t explored = 0; // search nodes visited

  std::size_t length() const { return w_star.size(); }
};

// Lexicographically smallest among the shortest strings the backtracking
// encoder can produce for g. Throws ResourceError carrying the best
// candidate found so far when the budget or time limit runs out, and
// EncodeError when g has no valid starting node.
CanonicalResult canonical_string(const Graph& g,
                                 const CanonicalOptions& opts = {});

// Every producible string of length <= length_cap, deduplicated.
std::set<std::string> enumerate_strings(const Graph& g,
                                        std::size_t length_cap,
                                        const CanonicalOptions& opts = {});

// True iff the canonical strings of g and h coincide.
bool is_canonical_equal(const Graph& g, const Graph& h,
                        const CanonicalOptions& opts = {});

} // namespace gcodec
