#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace gcodec {

// The nine-character instruction alphabet.
//
//   N / P   move the primary pointer forward / backward
//   n / p   move the secondary pointer forward / backward
//   V / v   insert a node attached to the primary / secondary node
//   C / c   insert an edge primary->secondary / secondary->primary
//   W       no-op
inline constexpr std::string_view alphabet = "NnPpVvCcW";

enum class Instruction : char {
  primary_next = 'N',
  primary_prev = 'P',
  secondary_next = 'n',
  secondary_prev = 'p',
  insert_primary = 'V',
  insert_secondary = 'v',
  edge_forward = 'C',
  edge_reverse = 'c',
  nop = 'W',
};

bool is_instruction(char ch);

std::optional<Instruction> parse_instruction(char ch);

constexpr char render(Instruction i) { return static_cast<char>(i); }

// Rank under the canonical total order C < N < P < V < W < c < n < p < v.
// The order coincides with ASCII, so plain string comparison agrees with
// it; the rank exists to make that explicit and testable.
int symbol_rank(char ch);

// Index of the first character outside the alphabet, or npos when clean.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
std::size_t find_invalid(std::string_view w);

// Throws ParseError naming the offending index unless w is clean.
void validate_instructions(std::string_view w);

} // namespace gcodec
