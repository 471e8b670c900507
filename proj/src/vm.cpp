#include "graphcodec/vm.hpp"

#include <algorithm>
#include <string>

namespace gcodec {

bool is_instruction(char ch) {
  return alphabet.find(ch) != std::string_view::npos;
}

std::optional<Instruction> parse_instruction(char ch) {
  if (!is_instruction(ch)) return std::nullopt;
  return static_cast<Instruction>(ch);
}

int symbol_rank(char ch) {
  static constexpr std::string_view order = "CNPVWcnpv";
  auto at = order.find(ch);
  if (at == std::string_view::npos)
    throw ArgumentError(std::string("not an instruction: '") + ch + "'");
  return static_cast<int>(at);
}

std::size_t find_invalid(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!is_instruction(w[i])) return i;
  return npos;
}

void validate_instructions(std::string_view w) {
  std::size_t at = find_invalid(w);
  if (at != npos)
    throw ParseError("invalid instruction '" + std::string(1, w[at]) +
                         "' at index " + std::to_string(at),
                     at);
}

InterpreterState initial_state(bool directed) {
  InterpreterState s{Graph(directed), Cdll{}, 0, 0};
  int root = s.graph.add_node();
  int head = s.list.insert_after(Cdll::npos, root);
  s.primary = head;
  s.secondary = head;
  return s;
}

void apply_instruction(InterpreterState& s, char instr) {
  switch (instr) {
    case 'N':
      s.primary = s.list.next(s.primary);
      break;
    case 'P':
      s.primary = s.list.prev(s.primary);
      break;
    case 'n':
      s.secondary = s.list.next(s.secondary);
      break;
    case 'p':
      s.secondary = s.list.prev(s.secondary);
      break;
    case 'V': {
      int u = s.graph.add_node();
      s.graph.add_edge(s.list.payload(s.primary), u);
      s.list.insert_after(s.primary, u); // the pointer itself stays put
      break;
    }
    case 'v': {
      int u = s.graph.add_node();
      s.graph.add_edge(s.list.payload(s.secondary), u);
      s.list.insert_after(s.secondary, u);
      break;
    }
    case 'C':
      s.graph.add_edge(s.list.payload(s.primary), s.list.payload(s.secondary));
      break;
    case 'c':
      s.graph.add_edge(s.list.payload(s.secondary), s.list.payload(s.primary));
      break;
    case 'W':
      break;
    default:
      throw ArgumentError(std::string("not an instruction: '") + instr + "'");
  }
}

InterpreterState step(const InterpreterState& s, char instr) {
  InterpreterState out = s;
  apply_instruction(out, instr);
  return out;
}

Graph string_to_graph(std::string_view w, bool directed) {
  validate_instructions(w);
  InterpreterState s = initial_state(directed);
  for (char ch : w) apply_instruction(s, ch);
  return std::move(s.graph);
}

std::vector<InterpreterState> decode_with_trace(std::string_view w,
                                                bool directed) {
  validate_instructions(w);
  std::vector<InterpreterState> trace;
  trace.reserve(w.size() + 1);
  trace.push_back(initial_state(directed));
  for (char ch : w) trace.push_back(step(trace.back(), ch));
  return trace;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

} // namespace

bool check_state_invariants(const InterpreterState& s, std::string* why) {
  if (!check_graph_invariants(s.graph, why)) return false;
  int n = s.graph.node_count();
  if (s.list.size() != n) return fail(why, "list size != node count");
  if (s.primary < 0 || s.primary >= s.list.size())
    return fail(why, "primary pointer not live");
  if (s.secondary < 0 || s.secondary >= s.list.size())
    return fail(why, "secondary pointer not live");

  // Bounded traversal: n next-hops from the head must visit a permutation
  // of the node set and land back on the head, with consistent back links.
  std::vector<char> seen(n, 0);
  int node = 0;
  for (int i = 0; i < n; ++i) {
    int value = s.list.payload(node);
    if (value < 0 || value >= n) return fail(why, "payload out of range");
    if (seen[value]) return fail(why, "duplicate payload in list");
    seen[value] = 1;
    int succ = s.list.next(node);
    if (s.list.prev(succ) != node) return fail(why, "broken prev link");
    node = succ;
  }
  if (node != 0) return fail(why, "list not circular");

  if (n > 0 && !s.graph.all_reachable_from(0))
    return fail(why, s.graph.directed() ? "node unreachable from node 0"
                                        : "graph not connected");
  return true;
}

} // namespace gcodec
