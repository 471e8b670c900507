#include "graphcodec/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>

#include <json.hpp>

#include "graphcodec/oracles.hpp"
#include "graphcodec/rng.hpp"
#include "graphcodec/vm.hpp"

namespace gcodec {

// ---------------------------------------------------------------- correlation

CorrelationOutput run_correlation(const ExperimentConfig& cfg) {
  CorrelationOutput out;
  out.ged = pairwise_ged(cfg.corpus, cfg.ged_size_cap, cfg.jobs);

  CanonicalOptions copts;
  copts.node_budget = cfg.canonical_budget;
  copts.time_limit = cfg.timeout_per_encode;

  std::size_t n = cfg.corpus.size();
  for (Method m : cfg.methods) {
    auto strings = encode_corpus(cfg.corpus, m, cfg.seed, cfg.jobs, copts);
    auto lev = pairwise_levenshtein(strings, cfg.jobs);
    DistanceReport report;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int g = out.ged[i * n + j];
        int l = lev[i * n + j];
        if (g > 0 && l > 0) report.points.emplace_back(g, l);
      }
    finalize_report(report);
    out.strings[m] = std::move(strings);
    out.lev[m] = std::move(lev);
    out.reports[m] = std::move(report);
  }
  return out;
}

// ------------------------------------------------------------------- scaling

double median_cpu_seconds(const std::function<void()>& fn, int repeats) {
  auto cpu_now = [] {
    timespec ts;
    clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * ts.tv_nsec;
  };
  // Loop until the sample is comfortably above the clock resolution, then
  // report per-call time.
  auto sample = [&] {
    long iterations = 1;
    for (;;) {
      double begin = cpu_now();
      for (long i = 0; i < iterations; ++i) fn();
      double elapsed = cpu_now() - begin;
      if (elapsed >= 1e-3) return elapsed / static_cast<double>(iterations);
      iterations *= 4;
    }
  };
  std::vector<double> times(std::max(repeats, 1));
  for (double& t : times) t = sample();
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& nt) {
  std::vector<std::pair<double, double>> logs;
  for (auto [n, t] : nt)
    if (t > 0 && n > 0) logs.emplace_back(std::log(n), std::log(t));
  if (logs.size() < 2)
    throw ArgumentError("fit_power_law needs at least 2 positive samples");

  double alpha = ols_slope(logs);
  double mx = 0, my = 0;
  for (auto [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(logs.size());
  my /= static_cast<double>(logs.size());
  double intercept = my - alpha * mx;

  double ss_res = 0, ss_tot = 0;
  for (auto [x, y] : logs) {
    double fit = intercept + alpha * x;
    ss_res += (y - fit) * (y - fit);
    ss_tot += (y - my) * (y - my);
  }
  double r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return {alpha, r2, intercept};
}

namespace {

struct ScalingFamily {
  std::string name;
  std::function<Graph(int n, std::uint64_t seed)> make;
};

std::vector<ScalingFamily> scaling_families() {
  return {
      {"ba_m1",
       [](int n, std::uint64_t s) {
         return generate({Family::barabasi_albert, n, 1, s});
       }},
      {"ba_m2",
       [](int n, std::uint64_t s) {
         return n >= 3 ? generate({Family::barabasi_albert, n, 2, s})
                       : generate({Family::barabasi_albert, n, 1, s});
       }},
      {"er_p03",
       [](int n, std::uint64_t s) {
         return generate({Family::erdos_renyi, n, 0.3, s});
       }},
      {"er_p05",
       [](int n, std::uint64_t s) {
         return generate({Family::erdos_renyi, n, 0.5, s});
       }},
  };
}

} // namespace

ScalingOutput run_scaling(const ExperimentConfig& cfg) {
  CanonicalOptions copts;
  copts.node_budget = cfg.canonical_budget;
  copts.time_limit = cfg.timeout_per_encode;

  std::vector<ScalingMethod> methods;
  for (Method m : cfg.methods) {
    switch (m) {
      case Method::canonical:
        methods.push_back({method_name(m),
                           [copts](const Graph& g, std::uint64_t) {
                             return canonical_string(g, copts).w_star;
                           },
                           cfg.canonical_max_n});
        break;
      case Method::greedy_min:
        methods.push_back({method_name(m),
                           [](const Graph& g, std::uint64_t) {
                             return graph_to_string_greedy_min(g).w;
                           },
                           0});
        break;
      case Method::greedy_rnd:
        methods.push_back({method_name(m),
                           [](const Graph& g, std::uint64_t s) {
                             return graph_to_string_greedy_rnd(g, s).w;
                           },
                           0});
        break;
    }
  }
  return run_scaling(cfg, methods);
}

ScalingOutput run_scaling(const ExperimentConfig& cfg,
                          const std::vector<ScalingMethod>& methods) {
  if (cfg.repeats < 1) throw ArgumentError("repeats must be at least 1");
  if (cfg.timeout_per_encode <= 0) throw ArgumentError("timeout must be > 0");

  ScalingOutput out;
  std::vector<int> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());
  auto families = scaling_families();

  for (const ScalingMethod& method : methods) {
    // per-n medians across families feed the fit
    std::vector<std::pair<double, double>> agg;
    for (const ScalingFamily& family : families) {
      bool dead = false; // stop growing n once an instance times out
      for (int n : sizes) {
        if (method.max_n > 0 && n > method.max_n) break;
        if (n < 3) continue;
        if (dead) {
          out.rows.push_back({n, family.name, method.name, 0.0, 0.0, true});
          continue;
        }
        std::vector<double> medians;
        SplitMix64 rng(cfg.seed ^ (static_cast<std::uint64_t>(n) << 20));
        for (int inst = 0; inst < cfg.instances && !dead; ++inst) {
          Graph g = family.make(n, rng.next());
          std::uint64_t encode_seed = rng.next();
          try {
            medians.push_back(median_cpu_seconds(
                [&] { (void)method.encode(g, encode_seed); }, cfg.repeats));
            if (medians.back() > cfg.timeout_per_encode) dead = true;
          } catch (const ResourceError&) {
            dead = true; // internal time limit fired mid-encode
          }
        }
        if (dead) {
          out.rows.push_back({n, family.name, method.name, 0.0, 0.0, true});
        } else {
          std::sort(medians.begin(), medians.end());
          double med = medians[medians.size() / 2];
          double iqr = medians.back() - medians.front();
          out.rows.push_back({n, family.name, method.name, med, iqr, false});
        }
      }
    }
    for (int n : sizes) {
      std::vector<double> at_n;
      for (const ScalingRow& row : out.rows)
        if (row.method == method.name && row.n == n && !row.timed_out)
          at_n.push_back(row.median_seconds);
      if (at_n.empty()) continue;
      std::sort(at_n.begin(), at_n.end());
      agg.emplace_back(n, at_n[at_n.size() / 2]);
    }
    if (agg.size() >= 2) {
      PowerLawFit fit = fit_power_law(agg);
      out.fits.push_back({method.name, fit.alpha, fit.r2, agg.size()});
    }
  }
  return out;
}

// ------------------------------------------------------------- neighbourhood

NeighborhoodReport run_neighborhood(const Graph& base,
                                    const ExperimentConfig& cfg) {
  CanonicalOptions copts;
  copts.node_budget = cfg.canonical_budget;
  copts.time_limit = cfg.timeout_per_encode;

  NeighborhoodReport report;
  report.base_string = canonical_string(base, copts).w_star;

  std::vector<EditedGraph> edits = edit_neighbors_1ged(base);
  std::vector<const Graph*> seen;
  for (const EditedGraph& e : edits) {
    NeighborhoodReport::EditNeighbor row;
    row.inserted = e.inserted;
    row.u = e.u;
    row.v = e.v;
    row.w_star = canonical_string(e.graph, copts).w_star;
    row.lev = levenshtein(report.base_string, row.w_star);
    report.edit_side.push_back(std::move(row));
    (e.inserted ? report.insertion_count : report.deletion_count) += 1;

    bool fresh = true;
    for (const Graph* other : seen)
      if (is_isomorphic(*other, e.graph,
                        std::max(other->node_count(), e.graph.node_count()))) {
        fresh = false;
        break;
      }
    if (fresh) seen.push_back(&e.graph);
  }
  report.unique_up_to_iso = static_cast<int>(seen.size());

  int cap = base.node_count() + static_cast<int>(report.base_string.size()) + 2;
  for (const std::string& s : string_neighbors_1lev(report.base_string)) {
    Graph decoded = string_to_graph(s, base.directed());
    NeighborhoodReport::StringNeighbor row;
    row.s = s;
    row.ged = ged_exact(base, decoded, cap);
    row.isomorphic = row.ged == 0;
    report.string_side.push_back(std::move(row));
  }
  return report;
}

// ------------------------------------------------------------------ emission

namespace {

using nlohmann::json;

json report_json(const DistanceReport& r) {
  json j;
  j["pairs"] = r.pair_count;
  j["defined"] = r.stats_defined;
  j["rho"] = r.stats_defined ? json(r.rho) : json(nullptr);
  j["p_value"] = r.stats_defined ? json(r.p_value) : json(nullptr);
  j["beta"] = r.stats_defined ? json(r.beta) : json(nullptr);
  return j;
}

} // namespace

std::string pairs_csv(const CorrelationOutput& out) {
  std::string header = "graph_i,graph_j,ged";
  for (const auto& [m, lev] : out.lev) header += ",lev_" + method_name(m);
  std::string body;
  auto n = static_cast<std::size_t>(
      std::lround(std::sqrt(static_cast<double>(out.ged.size()))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      body += std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(out.ged[i * n + j]);
      for (const auto& [m, lev] : out.lev)
        body += "," + std::to_string(lev[i * n + j]);
      body += "\n";
    }
  return header + "\n" + body;
}

std::string correlation_summary_json(const CorrelationOutput& out,
                                     const ExperimentConfig& cfg) {
  json j;
  j["seed"] = cfg.seed;
  j["corpus_size"] = cfg.corpus.size();
  json methods = json::object();
  for (const auto& [m, report] : out.reports)
    methods[method_name(m)] = report_json(report);
  j["methods"] = methods;
  return j.dump(2) + "\n";
}

std::string histogram_csv(const DistanceReport& report) {
  std::map<std::pair<int, int>, long> cells;
  for (auto [g, l] : report.points) ++cells[{g, l}];
  std::string out = "ged,lev,count\n";
  for (const auto& [cell, count] : cells)
    out += std::to_string(cell.first) + "," + std::to_string(cell.second) +
           "," + std::to_string(count) + "\n";
  return out;
}

std::string scaling_csv(const ScalingOutput& out) {
  std::string text = "n,family,method,median_seconds,iqr_seconds,timed_out\n";
  for (const ScalingRow& row : out.rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g,%.9g", row.median_seconds,
                  row.iqr_seconds);
    text += std::to_string(row.n) + "," + row.family + "," + row.method + "," +
            buf + "," + (row.timed_out ? "1" : "0") + "\n";
  }
  return text;
}

std::string scaling_summary_json(const ScalingOutput& out) {
  json fits = json::object();
  for (const ScalingFit& fit : out.fits)
    fits[fit.method] = {
        {"alpha", fit.alpha}, {"r2", fit.r2}, {"points", fit.points}};
  return json{{"fits", fits}}.dump(2) + "\n";
}

std::string neighborhood_edits_csv(const NeighborhoodReport& report) {
  std::string out = "op,u,v,canonical,lev\n";
  for (const auto& row : report.edit_side)
    out += std::string(row.inserted ? "insert" : "delete") + "," +
           std::to_string(row.u) + "," + std::to_string(row.v) + "," +
           row.w_star + "," + std::to_string(row.lev) + "\n";
  return out;
}

std::string neighborhood_strings_csv(const NeighborhoodReport& report) {
  std::string out = "string,ged,isomorphic\n";
  for (const auto& row : report.string_side)
    out += row.s + "," + std::to_string(row.ged) + "," +
           (row.isomorphic ? "1" : "0") + "\n";
  return out;
}

std::string neighborhood_summary_json(const NeighborhoodReport& report) {
  int lev_lo = 0, lev_hi = 0, ged_lo = 0, ged_hi = 0;
  if (!report.edit_side.empty()) {
    auto [lo, hi] = std::minmax_element(
        report.edit_side.begin(), report.edit_side.end(),
        [](const auto& a, const auto& b) { return a.lev < b.lev; });
    lev_lo = lo->lev;
    lev_hi = hi->lev;
  }
  {
    bool first = true;
    for (const auto& row : report.string_side) {
      if (row.isomorphic) continue; // range over structurally changed decodes
      if (first || row.ged < ged_lo) ged_lo = row.ged;
      if (first || row.ged > ged_hi) ged_hi = row.ged;
      first = false;
    }
  }
  json j;
  j["base_canonical"] = report.base_string;
  j["edit_neighbors"] = report.edit_side.size();
  j["deletions"] = report.deletion_count;
  j["insertions"] = report.insertion_count;
  j["unique_up_to_iso"] = report.unique_up_to_iso;
  j["lev_range"] = {lev_lo, lev_hi};
  j["string_neighbors"] = report.string_side.size();
  j["ged_range_nonisomorphic"] = {ged_lo, ged_hi};
  return j.dump(2) + "\n";
}

} // namespace gcodec
