#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcodec/canonical.hpp"
#include "graphcodec/encoder.hpp"
#include "graphcodec/graph.hpp"

namespace gcodec {

enum class Method { canonical, greedy_min, greedy_rnd };

Method method_from_name(const std::string& name);
std::string method_name(Method m);

// Batch kernels over corpora. Each kernel keeps a plain serial reference
// implementation (the *_serial functions) and an OpenMP variant that
// spreads independent cells over threads: jobs == 1 runs the reference
// path, jobs == 0 uses every core, jobs > 1 pins the thread count.
// Parallel results are byte-identical to serial ones.

// n x n Levenshtein matrix, row-major, diagonal zero.
std::vector<int> pairwise_levenshtein_serial(
    const std::vector<std::string>& strings);
std::vector<int> pairwise_levenshtein(const std::vector<std::string>& strings,
                                      int jobs = 1);

// n x n exact-GED matrix. Throws ResourceError when a graph exceeds
// size_cap, naming the offenders.
std::vector<int> pairwise_ged_serial(const std::vector<Graph>& graphs,
                                     int size_cap = 8);
std::vector<int> pairwise_ged(const std::vector<Graph>& graphs,
                              int size_cap = 8, int jobs = 1);

// One string per graph. greedy_rnd derives a sub-seed per graph from seed
// before any work starts, so results do not depend on scheduling.
std::vector<std::string> encode_corpus_serial(
    const std::vector<Graph>& graphs, Method method, std::uint64_t seed,
    const CanonicalOptions& opts = {});
std::vector<std::string> encode_corpus(const std::vector<Graph>& graphs,
                                       Method method, std::uint64_t seed,
                                       int jobs = 1,
                                       const CanonicalOptions& opts = {});

} // namespace gcodec
