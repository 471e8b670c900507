#pragma once

#include <vector>

#include "graphcodec/error.hpp"

namespace gcodec {

// Array-backed circular doubly-linked list of graph-node payloads.
//
// List nodes live in an append-only arena and are addressed by index; no
// instruction ever removes one. An empty list has no head: the first
// insert passes npos as anchor and becomes a self-linked singleton.
class Cdll {
public:
  static constexpr int npos = -1;

  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }

  // Splices a new node carrying payload immediately after anchor and
  // returns its index. anchor == npos is allowed only on an empty list.
  int insert_after(int anchor, int payload);

  int next(int node) const;
  int prev(int node) const;
  int payload(int node) const;

  // Node reached after steps forward hops (steps > 0) or |steps| backward
  // hops (steps < 0). Wraps around the circle, any magnitude works.
  int walk(int start, long long steps) const;

  // Payloads in circular order starting at start.
  std::vector<int> order_from(int start) const;

private:
  struct Node {
    int payload;
    int next;
    int prev;
  };

  void check_live(int node) const;

  std::vector<Node> nodes_;
};

} // namespace gcodec
