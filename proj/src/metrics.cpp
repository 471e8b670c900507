#include "graphcodec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

namespace gcodec {

int levenshtein(std::string_view w1, std::string_view w2) {
  const std::size_t n = w2.size();
  std::vector<int> row(n + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= w1.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      int sub = diag + (w1[i - 1] != w2[j - 1]);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[n];
}

int canonical_distance(const Graph& g, const Graph& h,
                       const CanonicalOptions& opts) {
  return levenshtein(canonical_string(g, opts).w_star,
                     canonical_string(h, opts).w_star);
}

namespace {

// Average (fractional) ranks, 1-based; ties share the mean of their span.
std::vector<double> average_ranks(const std::vector<double>& xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

bool constant(const std::vector<double>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(),
                            std::not_equal_to<>()) == xs.end();
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

} // namespace

SpearmanResult spearman(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw ArgumentError("spearman requires at least 3 points");
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    xs.push_back(x);
    ys.push_back(y);
  }
  if (constant(xs) || constant(ys))
    throw DegenerateDataError("spearman undefined for a constant coordinate");

  double rho = pearson(average_ranks(xs), average_ranks(ys));
  rho = std::clamp(rho, -1.0, 1.0);

  double n = static_cast<double>(points.size());
  double p;
  if (std::abs(rho) >= 1.0) {
    p = 0.0;
  } else {
    double t = rho * std::sqrt((n - 2) / (1 - rho * rho));
    boost::math::students_t dist(n - 2);
    p = 2 * boost::math::cdf(dist, -std::abs(t));
  }
  return {rho, std::clamp(p, 0.0, 1.0)};
}

double ols_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw ArgumentError("ols_slope requires at least 2 points");
  double n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : points) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0) throw DegenerateDataError("ols_slope undefined for constant x");
  return sxy / sxx;
}

void finalize_report(DistanceReport& report) {
  report.pair_count = report.points.size();
  report.stats_defined = false;
  if (report.points.size() < 3) return;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(report.points.size());
  for (const auto& [g, l] : report.points)
    pts.emplace_back(static_cast<double>(g), static_cast<double>(l));
  try {
    SpearmanResult s = spearman(pts);
    report.rho = s.rho;
    report.p_value = s.p_value;
    report.beta = ols_slope(pts);
    report.stats_defined = true;
  } catch (const DegenerateDataError&) {
    // leave the NaNs in place; pair_count still reports the data size
  }
}

} // namespace gcodec
