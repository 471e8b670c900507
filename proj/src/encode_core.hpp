#pragma once

// Machinery shared by the greedy encoder and the backtracking canonical
// search: the incremental encode state, the displacement-pair cache, and
// the scan for the first applicable (pair, operation) commit.

#include <optional>
#include <string>
#include <vector>

#include "graphcodec/cdll.hpp"
#include "graphcodec/encoder.hpp"
#include "graphcodec/graph.hpp"

namespace gcodec::detail {

struct EncState {
  const Graph* input = nullptr;
  Graph out;
  Cdll list;
  int p1 = 0;
  int p2 = 0;
  std::vector<int> iota;     // input -> output, -1 while unmapped
  std::vector<int> iota_inv; // output -> input
  int n_left = 0;
  int e_left = 0;
  std::string w;
  long long move_cost = 0;

  static EncState start(const Graph& g, int v0);
  bool done() const { return n_left == 0 && e_left == 0; }
};

// sorted_pairs(m) for every m seen so far; the lists are reused across the
// many steps and branches that share one encoding call.
class PairCache {
public:
  const std::vector<DisplacementPair>& get(int m);

private:
  std::vector<std::vector<DisplacementPair>> by_m_;
};

// Tentative list positions for every displacement in [-m, m] from one
// origin, built with a single sweep in each direction.
class WalkTable {
public:
  WalkTable(const Cdll& list, int origin, int m);
  int pos(int steps) const { return table_[steps + m_]; }

private:
  int m_;
  std::vector<int> table_;
};

// A structural operation made applicable by pointer displacements (a, b).
// l1/l2 are the tentative list positions of the two pointers.
struct Commit {
  int a = 0;
  int b = 0;
  char op = 'W';
  int l1 = 0;
  int l2 = 0;
};

// First applicable commit in scan order: pairs ascending per sorted_pairs,
// operations tried as V, v, C, c within each pair. The state must not be
// done. Total for encodable inputs.
Commit first_commit(const EncState& s, PairCache& pairs);

// Every applicable commit, deduplicated: V keyed by a alone, v by b alone,
// C/c by the full pair. Ordered cheapest-first like first_commit.
std::vector<Commit> all_commits(const EncState& s, PairCache& pairs);

// Unmapped input-graph neighbors of the node whose list position is the
// commit anchor, ascending. Non-empty exactly when V/v applies there.
std::vector<int> unmapped_neighbors(const EncState& s, int input_node);

// Applies the commit, appending the emitted fragment to s.w. For V/v,
// chosen names the unmapped neighbor to bring in; C/c ignore it.
void apply_commit(EncState& s, const Commit& cm, int chosen = -1);

} // namespace gcodec::detail
