#include "encode_core.hpp"

#include <algorithm>

namespace gcodec::detail {

EncState EncState::start(const Graph& g, int v0) {
  EncState s;
  s.input = &g;
  s.out = Graph(g.directed());
  int u0 = s.out.add_node();
  int head = s.list.insert_after(Cdll::npos, u0);
  s.p1 = head;
  s.p2 = head;
  s.iota.assign(g.node_count(), -1);
  s.iota[v0] = u0;
  s.iota_inv = {v0};
  s.n_left = g.node_count() - 1;
  s.e_left = static_cast<int>(g.edge_count());
  return s;
}

const std::vector<DisplacementPair>& PairCache::get(int m) {
  if (static_cast<int>(by_m_.size()) <= m) by_m_.resize(m + 1);
  if (by_m_[m].empty()) by_m_[m] = sorted_pairs(m);
  return by_m_[m];
}

WalkTable::WalkTable(const Cdll& list, int origin, int m)
    : m_(m), table_(2 * m + 1) {
  table_[m_] = origin;
  int fwd = origin;
  int bwd = origin;
  for (int k = 1; k <= m_; ++k) {
    fwd = list.next(fwd);
    bwd = list.prev(bwd);
    table_[m_ + k] = fwd;
    table_[m_ - k] = bwd;
  }
}

namespace {

// One scan resolves each input node at most once per commit.
class UnmappedMemo {
public:
  explicit UnmappedMemo(const EncState& s)
      : s_(s), memo_(s.input->node_count(), -1) {}

  bool operator()(int input_node) {
    signed char& m = memo_[input_node];
    if (m < 0) {
      m = 0;
      for (int c : s_.input->out_neighbors(input_node))
        if (s_.iota[c] < 0) {
          m = 1;
          break;
        }
    }
    return m != 0;
  }

private:
  const EncState& s_;
  std::vector<signed char> memo_;
};

// C: the input holds the edge primary-node -> secondary-node and the
// output lacks it. c: the reverse, meaningful only when directed.
bool edge_applicable(const EncState& s, int l1, int l2, bool reverse) {
  int v1 = s.iota_inv[s.list.payload(l1)];
  int v2 = s.iota_inv[s.list.payload(l2)];
  int from_in = reverse ? v2 : v1;
  int to_in = reverse ? v1 : v2;
  if (!s.input->has_edge(from_in, to_in)) return false;
  int from_out = s.list.payload(reverse ? l2 : l1);
  int to_out = s.list.payload(reverse ? l1 : l2);
  return !s.out.has_edge(from_out, to_out);
}

} // namespace

std::vector<int> unmapped_neighbors(const EncState& s, int input_node) {
  std::vector<int> out;
  for (int c : s.input->out_neighbors(input_node))
    if (s.iota[c] < 0) out.push_back(c);
  return out;
}

Commit first_commit(const EncState& s, PairCache& pairs) {
  int m = s.out.node_count();
  WalkTable walk1(s.list, s.p1, m);
  WalkTable walk2(s.list, s.p2, m);
  UnmappedMemo open(s);
  for (const auto& pr : pairs.get(m)) {
    int l1 = walk1.pos(pr.a);
    int l2 = walk2.pos(pr.b);
    if (s.n_left > 0) {
      if (open(s.iota_inv[s.list.payload(l1)]))
        return {pr.a, pr.b, 'V', l1, l2};
      if (open(s.iota_inv[s.list.payload(l2)]))
        return {pr.a, pr.b, 'v', l1, l2};
    }
    if (edge_applicable(s, l1, l2, false)) return {pr.a, pr.b, 'C', l1, l2};
    if (s.input->directed() && edge_applicable(s, l1, l2, true))
      return {pr.a, pr.b, 'c', l1, l2};
  }
  throw Error("internal: no applicable operation in encoder step");
}

std::vector<Commit> all_commits(const EncState& s, PairCache& pairs) {
  int m = s.out.node_count();
  WalkTable walk1(s.list, s.p1, m);
  WalkTable walk2(s.list, s.p2, m);
  UnmappedMemo open(s);
  std::vector<Commit> out;
  for (const auto& pr : pairs.get(m)) {
    int l1 = walk1.pos(pr.a);
    int l2 = walk2.pos(pr.b);
    if (s.n_left > 0) {
      if (pr.b == 0 && open(s.iota_inv[s.list.payload(l1)]))
        out.push_back({pr.a, 0, 'V', l1, l2});
      if (pr.a == 0 && open(s.iota_inv[s.list.payload(l2)]))
        out.push_back({0, pr.b, 'v', l1, l2});
    }
    if (edge_applicable(s, l1, l2, false)) out.push_back({pr.a, pr.b, 'C', l1, l2});
    if (s.input->directed() && edge_applicable(s, l1, l2, true))
      out.push_back({pr.a, pr.b, 'c', l1, l2});
  }
  return out;
}

void apply_commit(EncState& s, const Commit& cm, int chosen) {
  switch (cm.op) {
    case 'V': {
      int u = s.out.add_node();
      s.iota[chosen] = u;
      s.iota_inv.push_back(chosen);
      s.out.add_edge(s.list.payload(cm.l1), u);
      s.list.insert_after(cm.l1, u);
      s.w += moves(cm.a, PointerKind::primary);
      s.w += 'V';
      s.move_cost += std::abs(cm.a);
      s.p1 = cm.l1;
      --s.n_left;
      --s.e_left;
      break;
    }
    case 'v': {
      int u = s.out.add_node();
      s.iota[chosen] = u;
      s.iota_inv.push_back(chosen);
      s.out.add_edge(s.list.payload(cm.l2), u);
      s.list.insert_after(cm.l2, u);
      s.w += moves(cm.b, PointerKind::secondary);
      s.w += 'v';
      s.move_cost += std::abs(cm.b);
      s.p2 = cm.l2;
      --s.n_left;
      --s.e_left;
      break;
    }
    case 'C':
    case 'c': {
      int from = cm.op == 'C' ? cm.l1 : cm.l2;
      int to = cm.op == 'C' ? cm.l2 : cm.l1;
      s.out.add_edge(s.list.payload(from), s.list.payload(to));
      s.w += moves(cm.a, PointerKind::primary);
      s.w += moves(cm.b, PointerKind::secondary);
      s.w += cm.op;
      s.move_cost += std::abs(cm.a) + std::abs(cm.b);
      s.p1 = cm.l1;
      s.p2 = cm.l2;
      --s.e_left;
      break;
    }
    default:
      throw Error("internal: bad commit op");
  }
}

} // namespace gcodec::detail
