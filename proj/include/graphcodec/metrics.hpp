#pragma once

#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcodec/canonical.hpp"
#include "graphcodec/graph.hpp"

namespace gcodec {

// Minimum number of character insertions, deletions, and substitutions
// turning w1 into w2, by the usual O(|w1|*|w2|) dynamic program.
int levenshtein(std::string_view w1, std::string_view w2);

// Levenshtein distance between the canonical strings of g and h. Zero iff
// the canonical strings coincide.
int canonical_distance(const Graph& g, const Graph& h,
                       const CanonicalOptions& opts = {});

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0; // two-sided, asymptotic t approximation, n-2 dof
};

// Spearman rank correlation with average ranks for ties. Throws
// ArgumentError for fewer than 3 points and DegenerateDataError when
// either coordinate is constant.
SpearmanResult spearman(const std::vector<std::pair<double, double>>& points);

// OLS slope of y on x. Throws ArgumentError for fewer than 2 points and
// DegenerateDataError for constant x.
double ols_slope(const std::vector<std::pair<double, double>>& points);

// Statistics of one encoding method's string distances against ground
// truth GED over the filtered pair set (i < j, GED > 0, Lev > 0).
struct DistanceReport {
  std::size_t pair_count = 0;
  bool stats_defined = false; // false when the filtered set is degenerate
  double rho = std::numeric_limits<double>::quiet_NaN();
  double p_value = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::pair<int, int>> points; // (ged, lev) per surviving pair
};

// Fills the statistics of a report from its points; degenerate data turns
// stats_defined off instead of throwing.
void finalize_report(DistanceReport& report);

} // namespace gcodec
