#include "graphcodec/encoder.hpp"

#include <algorithm>
#include <tuple>

#include "encode_core.hpp"
#include "graphcodec/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcodec {

std::vector<DisplacementPair> sorted_pairs(int m) {
  if (m < 1) throw ArgumentError("sorted_pairs requires m >= 1");
  std::vector<DisplacementPair> out;
  out.reserve((2 * m + 1) * (2 * m + 1));
  for (int a = -m; a <= m; ++a)
    for (int b = -m; b <= m; ++b) out.push_back({a, b});
  std::sort(out.begin(), out.end(),
            [](const DisplacementPair& x, const DisplacementPair& y) {
              return std::make_tuple(x.cost(), std::abs(x.a), x.a, x.b) <
                     std::make_tuple(y.cost(), std::abs(y.a), y.a, y.b);
            });
  return out;
}

std::string moves(int steps, PointerKind which) {
  char forward = which == PointerKind::primary ? 'N' : 'n';
  char backward = which == PointerKind::primary ? 'P' : 'p';
  if (steps >= 0) return std::string(steps, forward);
  return std::string(-steps, backward);
}

std::vector<int> valid_starts(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.node_count(); ++v)
    if (g.all_reachable_from(v)) out.push_back(v);
  return out;
}

EncodeResult graph_to_string_greedy(const Graph& g, int v0) {
  if (g.node_count() == 0) throw ArgumentError("cannot encode an empty graph");
  if (v0 < 0 || v0 >= g.node_count())
    throw ArgumentError("start node " + std::to_string(v0) + " out of range");
  int bad = g.first_unreachable_from(v0);
  if (bad >= 0)
    throw EncodeError("node " + std::to_string(bad) +
                      " is not reachable from start node " +
                      std::to_string(v0));

  detail::EncState s = detail::EncState::start(g, v0);
  detail::PairCache pairs;
  std::vector<CommitRecord> commits;
  while (!s.done()) {
    detail::Commit cm = detail::first_commit(s, pairs);
    int chosen = -1;
    if (cm.op == 'V' || cm.op == 'v') {
      int anchor = cm.op == 'V' ? cm.l1 : cm.l2;
      int at = s.iota_inv[s.list.payload(anchor)];
      // smallest unmapped neighbor, for a fully deterministic encoding
      for (int c : g.out_neighbors(at))
        if (s.iota[c] < 0) {
          chosen = c;
          break;
        }
    }
    detail::apply_commit(s, cm, chosen);
    commits.push_back({cm.a, cm.b, cm.op, chosen});
  }
  return {std::move(s.w),    std::move(s.iota), std::move(s.iota_inv),
          s.move_cost,       v0,                std::move(commits)};
}

namespace {

bool better(const EncodeResult& a, const EncodeResult& b) {
  return std::make_tuple(a.w.size(), std::cref(a.w), a.start) <
         std::make_tuple(b.w.size(), std::cref(b.w), b.start);
}

} // namespace

EncodeResult graph_to_string_greedy_min(const Graph& g, int jobs) {
  std::vector<int> starts = valid_starts(g);
  if (starts.empty())
    throw EncodeError("no valid starting node: graph is not encodable");

  std::vector<EncodeResult> results(starts.size());
  if (jobs == 1 || starts.size() == 1) {
    for (std::size_t i = 0; i < starts.size(); ++i)
      results[i] = graph_to_string_greedy(g, starts[i]);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
    for (std::size_t i = 0; i < starts.size(); ++i)
      results[i] = graph_to_string_greedy(g, starts[i]);
  }

  // Deterministic reduction: scheduling cannot change the winner.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (better(results[i], results[best])) best = i;
  return std::move(results[best]);
}

EncodeResult graph_to_string_greedy_rnd(const Graph& g, std::uint64_t seed) {
  std::vector<int> starts = valid_starts(g);
  if (starts.empty())
    throw EncodeError("no valid starting node: graph is not encodable");
  SplitMix64 rng(seed);
  int v0 = starts[rng.below(starts.size())];
  return graph_to_string_greedy(g, v0);
}

} // namespace gcodec
