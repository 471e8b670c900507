#include "graphcodec/canonical.hpp"

#include <chrono>
#include <optional>

#include "encode_core.hpp"

namespace gcodec {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const Graph* g = nullptr;
  CanonicalOptions opts;
  detail::PairCache pairs;
  std::size_t explored = 0;

  bool have_best = false;
  std::string best;

  // enumerate mode: collect every completion up to cap instead of minimising
  std::set<std::string>* sink = nullptr;
  std::size_t cap = 0;

  std::optional<Clock::time_point> deadline;

  void tick() {
    ++explored;
    if (opts.node_budget > 0 &&
        explored > static_cast<std::size_t>(opts.node_budget))
      throw ResourceError("canonical search budget of " +
                              std::to_string(opts.node_budget) +
                              " nodes exhausted",
                          best_or_empty(), explored);
    if (deadline && (explored & 1023) == 0 && Clock::now() > *deadline)
      throw ResourceError("canonical search time limit exceeded",
                          best_or_empty(), explored);
  }

  std::string best_or_empty() const { return have_best ? best : ""; }

  // Completions always need at least e_left more instructions: one V/v or
  // C/c per remaining edge, with remaining nodes riding along on V/v.
  bool cut(const detail::EncState& s) const {
    std::size_t floor = s.w.size() + static_cast<std::size_t>(s.e_left);
    if (sink) return floor > cap;
    return opts.prune && have_best && floor > best.size();
  }

  void complete(const detail::EncState& s) {
    if (sink) {
      if (s.w.size() <= cap) sink->insert(s.w);
      return;
    }
    if (!have_best || s.w.size() < best.size() ||
        (s.w.size() == best.size() && s.w < best)) {
      best = s.w;
      have_best = true;
    }
  }

  void dfs(detail::EncState s) {
    for (;;) {
      if (cut(s)) return;
      if (s.done()) {
        complete(s);
        return;
      }
      if (opts.strict) {
        for (const detail::Commit& cm : detail::all_commits(s, pairs)) {
          if (cm.op == 'V' || cm.op == 'v') {
            int anchor = cm.op == 'V' ? cm.l1 : cm.l2;
            for (int c : detail::unmapped_neighbors(
                     s, s.iota_inv[s.list.payload(anchor)])) {
              tick();
              detail::EncState child = s;
              detail::apply_commit(child, cm, c);
              dfs(std::move(child));
            }
          } else {
            tick();
            detail::EncState child = s;
            detail::apply_commit(child, cm);
            dfs(std::move(child));
          }
        }
        return;
      }
      detail::Commit cm = detail::first_commit(s, pairs);
      if (cm.op == 'C' || cm.op == 'c') {
        tick();
        detail::apply_commit(s, cm);
        continue;
      }
      int anchor = cm.op == 'V' ? cm.l1 : cm.l2;
      std::vector<int> choices =
          detail::unmapped_neighbors(s, s.iota_inv[s.list.payload(anchor)]);
      if (choices.size() == 1) {
        tick();
        detail::apply_commit(s, cm, choices[0]);
        continue;
      }
      for (int c : choices) {
        tick();
        detail::EncState child = s;
        detail::apply_commit(child, cm, c);
        dfs(std::move(child));
      }
      return;
    }
  }

  void run() {
    if (opts.time_limit > 0)
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        opts.time_limit));
    std::vector<int> starts = valid_starts(*g);
    if (starts.empty())
      throw EncodeError("no valid starting node: graph is not encodable");
    for (int v0 : starts) dfs(detail::EncState::start(*g, v0));
  }
};

} // namespace

CanonicalResult canonical_string(const Graph& g, const CanonicalOptions& opts) {
  if (g.node_count() == 0) throw ArgumentError("cannot encode an empty graph");
  Search search;
  search.g = &g;
  search.opts = opts;
  search.run();
  return {search.best, search.explored};
}

std::set<std::string> enumerate_strings(const Graph& g, std::size_t length_cap,
                                        const CanonicalOptions& opts) {
  if (g.node_count() == 0) throw ArgumentError("cannot encode an empty graph");
  std::set<std::string> out;
  Search search;
  search.g = &g;
  search.opts = opts;
  search.sink = &out;
  search.cap = length_cap;
  search.run();
  return out;
}

bool is_canonical_equal(const Graph& g, const Graph& h,
                        const CanonicalOptions& opts) {
  return canonical_string(g, opts).w_star == canonical_string(h, opts).w_star;
}

} // namespace gcodec
