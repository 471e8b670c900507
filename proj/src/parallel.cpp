#include "graphcodec/parallel.hpp"

#include <exception>
#include <stdexcept>

#include "graphcodec/metrics.hpp"
#include "graphcodec/oracles.hpp"
#include "graphcodec/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcodec {

Method method_from_name(const std::string& name) {
  if (name == "canonical") return Method::canonical;
  if (name == "greedy-min" || name == "greedy_min") return Method::greedy_min;
  if (name == "greedy-rnd" || name == "greedy_rnd") return Method::greedy_rnd;
  throw ArgumentError("unknown encoding method '" + name + "'");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::canonical: return "canonical";
    case Method::greedy_min: return "greedy_min";
    case Method::greedy_rnd: return "greedy_rnd";
  }
  throw ArgumentError("unknown encoding method value");
}

namespace {

// Runs body(k) for k in [0, count), optionally under OpenMP. Exceptions
// from workers are captured and rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t count, int jobs, const Body& body) {
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::exception_ptr failure = nullptr;
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
#else
  for (std::size_t k = 0; k < count; ++k) body(k);
#endif
  if (failure) std::rethrow_exception(failure);
}

// Flattened strict upper triangle: cell k <-> pair (i, j), i < j.
std::pair<std::size_t, std::size_t> unrank_pair(std::size_t k, std::size_t n) {
  std::size_t i = 0;
  std::size_t row = n - 1;
  while (k >= row) {
    k -= row;
    --row;
    ++i;
  }
  return {i, i + 1 + k};
}

} // namespace

std::vector<int> pairwise_levenshtein(const std::vector<std::string>& strings,
                                      int jobs) {
  std::size_t n = strings.size();
  std::vector<int> matrix(n * n, 0);
  std::size_t cells = n < 2 ? 0 : n * (n - 1) / 2;
  for_each_index(cells, jobs, [&](std::size_t k) {
    auto [i, j] = unrank_pair(k, n);
    int d = levenshtein(strings[i], strings[j]);
    matrix[i * n + j] = d;
    matrix[j * n + i] = d;
  });
  return matrix;
}

std::vector<int> pairwise_levenshtein_serial(
    const std::vector<std::string>& strings) {
  std::size_t n = strings.size();
  std::vector<int> matrix(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int d = levenshtein(strings[i], strings[j]);
      matrix[i * n + j] = d;
      matrix[j * n + i] = d;
    }
  return matrix;
}

std::vector<int> pairwise_ged(const std::vector<Graph>& graphs, int size_cap,
                              int jobs) {
  std::string offenders;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (graphs[i].node_count() > size_cap)
      offenders += (offenders.empty() ? "" : ", ") + std::to_string(i);
  if (!offenders.empty())
    throw ResourceError("graphs over the GED size cap of " +
                        std::to_string(size_cap) + ": indices " + offenders);

  std::size_t n = graphs.size();
  std::vector<int> matrix(n * n, 0);
  std::size_t cells = n < 2 ? 0 : n * (n - 1) / 2;
  for_each_index(cells, jobs, [&](std::size_t k) {
    auto [i, j] = unrank_pair(k, n);
    int d = ged_exact(graphs[i], graphs[j], size_cap);
    matrix[i * n + j] = d;
    matrix[j * n + i] = d;
  });
  return matrix;
}

std::vector<int> pairwise_ged_serial(const std::vector<Graph>& graphs,
                                     int size_cap) {
  std::size_t n = graphs.size();
  std::vector<int> matrix(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int d = ged_exact(graphs[i], graphs[j], size_cap);
      matrix[i * n + j] = d;
      matrix[j * n + i] = d;
    }
  return matrix;
}

std::vector<std::string> encode_corpus(const std::vector<Graph>& graphs,
                                       Method method, std::uint64_t seed,
                                       int jobs, const CanonicalOptions& opts) {
  std::vector<std::uint64_t> sub_seeds(graphs.size());
  SplitMix64 rng(seed);
  for (auto& s : sub_seeds) s = rng.next();

  std::vector<std::string> out(graphs.size());
  for_each_index(graphs.size(), jobs, [&](std::size_t k) {
    switch (method) {
      case Method::canonical:
        out[k] = canonical_string(graphs[k], opts).w_star;
        break;
      case Method::greedy_min:
        out[k] = graph_to_string_greedy_min(graphs[k]).w;
        break;
      case Method::greedy_rnd:
        out[k] = graph_to_string_greedy_rnd(graphs[k], sub_seeds[k]).w;
        break;
    }
  });
  return out;
}

std::vector<std::string> encode_corpus_serial(const std::vector<Graph>& graphs,
                                              Method method,
                                              std::uint64_t seed,
                                              const CanonicalOptions& opts) {
  SplitMix64 rng(seed);
  std::vector<std::string> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) {
    std::uint64_t sub = rng.next();
    switch (method) {
      case Method::canonical:
        out.push_back(canonical_string(g, opts).w_star);
        break;
      case Method::greedy_min:
        out.push_back(graph_to_string_greedy_min(g).w);
        break;
      case Method::greedy_rnd:
        out.push_back(graph_to_string_greedy_rnd(g, sub).w);
        break;
    }
  }
  return out;
}

} // namespace gcodec
