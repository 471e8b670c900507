#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "graphcodec/graph.hpp"

namespace gcodec {

// Candidate displacement of the two pointers: a forward/backward steps for
// the primary, b for the secondary. Cost is the number of move
// instructions the pair would emit.
struct DisplacementPair {
  int a = 0;
  int b = 0;

  int cost() const { return std::abs(a) + std::abs(b); }
  bool operator==(const DisplacementPair&) const = default;
};

// All (2m+1)^2 pairs with |a|, |b| <= m, sorted ascending by the key
// (|a|+|b|, |a|, a, b). The leading key minimises pointer travel; the
// rest break ties deterministically.
std::vector<DisplacementPair> sorted_pairs(int m);

enum class PointerKind { primary, secondary };

// Move instructions for one pointer: "NNN" for (3, primary),
// "pp" for (-2, secondary), "" for zero steps.
std::string moves(int steps, PointerKind which);

// One committed encoder step: the displacement pair, the structural
// instruction it emitted, and (for V/v) the input node brought in.
struct CommitRecord {
  int a = 0;
  int b = 0;
  char op = 'W';
  int chosen = -1;
};

struct EncodeResult {
  std::string w;
  std::vector<int> iota;     // input node id -> output node id
  std::vector<int> iota_inv; // output node id -> input node id
  long long move_cost = 0;   // total pointer travel, == count of N/P/n/p
  int start = 0;             // starting node the encoding used
  std::vector<CommitRecord> commits;
};

// Greedy encoding from start node v0: at each step the cheapest
// displacement pair enabling any structural operation is committed, trying
// V, v, C, c in that order. The decode of the result is isomorphic to g,
// with iota as the witness. Throws EncodeError when some node is
// unreachable from v0 and ArgumentError on an empty graph.
EncodeResult graph_to_string_greedy(const Graph& g, int v0);

// Greedy from every valid start. The shortest string wins; ties go to the
// lexicographically smaller string, then the smaller start id. jobs != 1
// evaluates starts in parallel without changing the result.
EncodeResult graph_to_string_greedy_min(const Graph& g, int jobs = 1);

// Greedy from a start drawn uniformly from the valid ones by a seeded
// generator. Deterministic for fixed (g, seed).
EncodeResult graph_to_string_greedy_rnd(const Graph& g, std::uint64_t seed);

// Nodes from which every node is reachable, ascending.
std::vector<int> valid_starts(const Graph& g);

} // namespace gcodec
