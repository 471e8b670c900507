#include "graphcodec/cdll.hpp"

#include <string>

namespace gcodec {

void Cdll::check_live(int node) const {
  if (node < 0 || node >= size())
    throw ArgumentError("cdll index " + std::to_string(node) + " not live");
}

int Cdll::insert_after(int anchor, int payload) {
  int fresh = size();
  if (anchor == npos) {
    if (!empty())
      throw ArgumentError("missing anchor on a non-empty cdll");
    nodes_.push_back({payload, fresh, fresh});
    return fresh;
  }
  check_live(anchor);
  int after = nodes_[anchor].next;
  nodes_.push_back({payload, after, anchor});
  nodes_[anchor].next = fresh;
  nodes_[after].prev = fresh;
  return fresh;
}

int Cdll::next(int node) const {
  check_live(node);
  return nodes_[node].next;
}

int Cdll::prev(int node) const {
  check_live(node);
  return nodes_[node].prev;
}

int Cdll::payload(int node) const {
  check_live(node);
  return nodes_[node].payload;
}

int Cdll::walk(int start, long long steps) const {
  check_live(start);
  long long hops = steps % size();
  int node = start;
  if (hops > 0)
    for (long long i = 0; i < hops; ++i) node = nodes_[node].next;
  else
    for (long long i = 0; i > hops; --i) node = nodes_[node].prev;
  return node;
}

std::vector<int> Cdll::order_from(int start) const {
  check_live(start);
  std::vector<int> out;
  out.reserve(nodes_.size());
  int node = start;
  do {
    out.push_back(nodes_[node].payload);
    node = nodes_[node].next;
  } while (node != start);
  return out;
}

} // namespace gcodec
