#include "graphcodec/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace gcodec {

namespace {

void check_cap(const Graph& g, const Graph& h, int size_cap,
               const char* what) {
  int n = std::max(g.node_count(), h.node_count());
  if (n > size_cap)
    throw ResourceError(std::string(what) + ": graph with " +
                        std::to_string(n) + " nodes exceeds the size cap of " +
                        std::to_string(size_cap));
}

// Maximises the number of g-edges an injective mapping of V(g) into V(h)
// lands on h-edges. g must be the smaller graph.
class MatchSearch {
public:
  MatchSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
    // edges of g whose later endpoint is node k, checked when k is placed
    edges_at_.resize(g.node_count());
    for (int u = 0; u < g.node_count(); ++u)
      for (int v : g.out_neighbors(u))
        if (v < u) edges_at_[u].push_back(v);
    // upper bound on edges still placeable once nodes < k are all placed
    remaining_.assign(g.node_count() + 1, 0);
    for (int k = g.node_count() - 1; k >= 0; --k)
      remaining_[k] =
          remaining_[k + 1] + static_cast<int>(edges_at_[k].size());
  }

  int best_matched() {
    map_.assign(g_.node_count(), -1);
    used_.assign(h_.node_count(), 0);
    best_ = -1;
    place(0, 0);
    return best_;
  }

private:
  void place(int k, int matched) {
    if (matched + remaining_[k] <= best_) return;
    if (k == g_.node_count()) {
      best_ = std::max(best_, matched);
      return;
    }
    for (int t = 0; t < h_.node_count(); ++t) {
      if (used_[t]) continue;
      int gained = 0;
      for (int v : edges_at_[k])
        if (h_.has_edge(map_[v], t)) ++gained;
      map_[k] = t;
      used_[t] = 1;
      place(k + 1, matched + gained);
      used_[t] = 0;
      map_[k] = -1;
    }
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<int>> edges_at_;
  std::vector<int> remaining_;
  std::vector<int> map_;
  std::vector<char> used_;
  int best_ = -1;
};

} // namespace

int ged_exact(const Graph& g, const Graph& h, int size_cap) {
  if (g.directed() || h.directed())
    throw ArgumentError("ged_exact handles undirected graphs only");
  check_cap(g, h, size_cap, "ged_exact");

  const Graph& small = g.node_count() <= h.node_count() ? g : h;
  const Graph& large = g.node_count() <= h.node_count() ? h : g;

  // Mapping every node of the smaller graph is never worse than leaving
  // one out: a mapped pair saves its delete+insert and can only help the
  // edge terms. So the minimum over partial maps is attained at full maps.
  int matched = MatchSearch(small, large).best_matched();
  int node_cost = large.node_count() - small.node_count();
  int edge_cost = static_cast<int>(small.edge_count()) +
                  static_cast<int>(large.edge_count()) - 2 * matched;
  return node_cost + edge_cost;
}

namespace {

std::vector<std::pair<int, int>> degree_sequence(const Graph& g) {
  std::vector<std::pair<int, int>> deg;
  deg.reserve(g.node_count());
  for (int u = 0; u < g.node_count(); ++u)
    deg.emplace_back(g.out_degree(u), g.in_degree(u));
  std::sort(deg.begin(), deg.end());
  return deg;
}

class IsoSearch {
public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
    order_.resize(g.node_count());
    std::iota(order_.begin(), order_.end(), 0);
    // high-degree nodes first: they constrain the search fastest
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.out_degree(a) + g.in_degree(a) >
             g.out_degree(b) + g.in_degree(b);
    });
  }

  bool found() {
    map_.assign(g_.node_count(), -1);
    used_.assign(h_.node_count(), 0);
    return place(0);
  }

private:
  bool consistent(std::size_t k, int u, int t) const {
    if (g_.out_degree(u) != h_.out_degree(t) ||
        g_.in_degree(u) != h_.in_degree(t))
      return false;
    for (std::size_t i = 0; i < k; ++i) {
      int v = order_[i];
      if (g_.has_edge(u, v) != h_.has_edge(t, map_[v])) return false;
      if (g_.has_edge(v, u) != h_.has_edge(map_[v], t)) return false;
    }
    return true;
  }

  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    int u = order_[k];
    for (int t = 0; t < h_.node_count(); ++t) {
      if (used_[t] || !consistent(k, u, t)) continue;
      map_[u] = t;
      used_[t] = 1;
      if (place(k + 1)) return true;
      used_[t] = 0;
      map_[u] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

} // namespace

bool is_isomorphic(const Graph& g, const Graph& h, int size_cap) {
  if (g.directed() != h.directed())
    throw ArgumentError("cannot compare directed with undirected graphs");
  check_cap(g, h, size_cap, "is_isomorphic");
  if (g.node_count() != h.node_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  if (g.node_count() == 0) return true;
  return IsoSearch(g, h).found();
}

} // namespace gcodec
