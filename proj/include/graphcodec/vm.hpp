#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphcodec/cdll.hpp"
#include "graphcodec/graph.hpp"
#include "graphcodec/instruction.hpp"

namespace gcodec {

// Complete interpreter state: the graph under construction, the circular
// list holding one entry per graph node, and the two traversal pointers
// (indices into the list).
struct InterpreterState {
  Graph graph;
  Cdll list;
  int primary = 0;
  int secondary = 0;

  bool operator==(const InterpreterState&) const = default;
};

// One node (id 0), a singleton list, both pointers on it.
InterpreterState initial_state(bool directed);

// Applies one instruction in place. Total on valid states: no instruction
// can fail or corrupt the state.
void apply_instruction(InterpreterState& s, char instr);

// Pure single-step variant of apply_instruction.
InterpreterState step(const InterpreterState& s, char instr);

// Executes w from the initial state and returns the resulting graph.
// Throws ParseError if w contains a character outside the alphabet.
Graph string_to_graph(std::string_view w, bool directed = false);

// As string_to_graph but keeps every intermediate state: result[0] is the
// initial state and result[k] the state after w[k-1].
std::vector<InterpreterState> decode_with_trace(std::string_view w,
                                                bool directed = false);

// Interpreter-state invariants: list/graph bijection, live pointers,
// circular consistency, and reachability of every node from node 0.
bool check_state_invariants(const InterpreterState& s,
                            std::string* why = nullptr);

} // namespace gcodec
