#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "graphcodec/generators.hpp"
#include "graphcodec/metrics.hpp"
#include "graphcodec/parallel.hpp"

namespace gcodec {

// One knob set drives all three experiments; the scaling-only fields are
// ignored by the others. Defaults are desk scale, not survey scale.
struct ExperimentConfig {
  std::vector<Graph> corpus; // correlation input
  std::vector<Method> methods = {Method::canonical, Method::greedy_min,
                                 Method::greedy_rnd};
  std::uint64_t seed = 42;
  double timeout_per_encode = 60.0; // seconds
  int repeats = 5;                  // timing repetitions per measurement
  int jobs = 1;
  int ged_size_cap = 8;
  long long canonical_budget = 100'000'000;

  // scaling run
  std::vector<int> sizes = {4, 6, 8, 10, 12, 14, 16, 18, 20};
  int canonical_max_n = 12;
  int instances = 2; // graphs per (n, family)
};

// ---------------------------------------------------------------- correlation

struct CorrelationOutput {
  std::vector<int> ged; // n x n, shared by every method
  std::map<Method, std::vector<std::string>> strings;
  std::map<Method, std::vector<int>> lev; // n x n per method
  std::map<Method, DistanceReport> reports;
};

// Encodes the corpus with every method, computes all-pairs Levenshtein and
// exact GED, filters pairs (i < j, GED > 0, Lev > 0), and reports rho, p,
// and beta per method. Degenerate filtered sets come back with
// stats_defined == false rather than an error.
CorrelationOutput run_correlation(const ExperimentConfig& cfg);

// ------------------------------------------------------------------- scaling

struct ScalingRow {
  int n = 0;
  std::string family;
  std::string method;
  double median_seconds = 0.0;
  double iqr_seconds = 0.0;
  bool timed_out = false;
};

struct ScalingFit {
  std::string method;
  double alpha = 0.0; // exponent of T(n) = c * n^alpha on log-log data
  double r2 = 0.0;
  std::size_t points = 0;
};

struct ScalingOutput {
  std::vector<ScalingRow> rows;
  std::vector<ScalingFit> fits;
};

struct ScalingMethod {
  std::string name;
  std::function<std::string(const Graph&, std::uint64_t seed)> encode;
  int max_n = 0; // 0 = no cap
};

// Times every method over seeded synthetic families (Barabasi-Albert
// m in {1,2}, Erdos-Renyi p in {0.3,0.5}) at the configured sizes: median
// CPU seconds over cfg.repeats measurements per (n, family, method), plus
// a log-log power-law fit per method over per-n aggregate medians.
// An encode past cfg.timeout_per_encode marks the row timed out, skips
// larger n for that (method, family), and drops it from the fit.
ScalingOutput run_scaling(const ExperimentConfig& cfg);
ScalingOutput run_scaling(const ExperimentConfig& cfg,
                          const std::vector<ScalingMethod>& methods);

struct PowerLawFit {
  double alpha = 0.0;
  double r2 = 0.0;
  double log_c = 0.0;
};

// OLS fit of log t on log n over (n, t) samples with t > 0.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& nt);

// Median CPU seconds per call of fn, measured cfg.repeats times. Each
// measurement loops fn until it has consumed at least a millisecond so
// that fast calls stay above the clock's resolution.
double median_cpu_seconds(const std::function<void()>& fn, int repeats);

// ------------------------------------------------------------- neighbourhood

struct NeighborhoodReport {
  std::string base_string; // canonical string of the base graph

  struct EditNeighbor {
    bool inserted = false;
    int u = 0;
    int v = 0;
    std::string w_star;
    int lev = 0; // distance of w_star to base_string
  };
  struct StringNeighbor {
    std::string s;
    int ged = 0; // exact GED of the decode to the base graph
    bool isomorphic = false;
  };

  std::vector<EditNeighbor> edit_side;     // every 1-GED edit of the base
  std::vector<StringNeighbor> string_side; // every 1-Levenshtein string
  int deletion_count = 0;
  int insertion_count = 0;
  int unique_up_to_iso = 0; // edit neighbors after isomorphism dedup
};

// Both directions of the locality experiment around one base graph.
NeighborhoodReport run_neighborhood(const Graph& base,
                                    const ExperimentConfig& cfg = {});

// ------------------------------------------------------------------ emission

// CSV row per unordered corpus pair:
//   graph_i,graph_j,ged,lev_<method>...
std::string pairs_csv(const CorrelationOutput& out);

// JSON object {"seed":..,"methods":{name:{"pairs":..,"defined":..,
// "rho":..,"p_value":..,"beta":..}}}
std::string correlation_summary_json(const CorrelationOutput& out,
                                     const ExperimentConfig& cfg);

// CSV rows ged,lev,count over the filtered pair set of one method.
std::string histogram_csv(const DistanceReport& report);

// CSV rows n,family,method,median_seconds,iqr_seconds,timed_out.
std::string scaling_csv(const ScalingOutput& out);

// JSON object {"fits":{method:{"alpha":..,"r2":..,"points":..}}}.
std::string scaling_summary_json(const ScalingOutput& out);

// CSVs op,u,v,lev / string,ged,isomorphic and a JSON summary.
std::string neighborhood_edits_csv(const NeighborhoodReport& report);
std::string neighborhood_strings_csv(const NeighborhoodReport& report);
std::string neighborhood_summary_json(const NeighborhoodReport& report);

} // namespace gcodec
