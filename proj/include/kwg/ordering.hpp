#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwg/grid.hpp"
#include "kwg/order_stats.hpp"
#include "kwg/parent_dist.hpp"

namespace kwg {

enum class Direction { increasing, decreasing, constant, non_monotone };

struct SlopeWitness {
  double x;
  int sign;  ///< sign of the difference that starts at x, opposite to the one before it
};

struct MonotonicityReport {
  Direction direction = Direction::constant;
  std::vector<SlopeWitness> witnesses;  ///< nonempty iff non_monotone
  double max_violation = 0.0;           ///< largest |difference| against the dominant direction
};

/// Classifies values sampled at strictly increasing xs by the signs of successive
/// differences; |d| <= slope_tol * max(1, |f_k|, |f_k+1|) counts as zero.
/// Throws EvaluationError on a non-finite value.
MonotonicityReport monotonicity_scan(std::span<const double> xs, std::span<const double> values,
                                     double slope_tol = 1e-9);

MonotonicityReport monotonicity_scan(const std::function<double(double)>& f, const Grid& grid,
                                     double slope_tol = 1e-9, unsigned workers = 1);

/// Evaluates f at every point, optionally split across workers. The result does
/// not depend on the number of workers; the first failing point (by index) is
/// the one reported.
std::vector<double> evaluate_on_grid(std::span<const double> xs, const std::function<double(double)>& f,
                                     unsigned workers = 1);

enum class Relation { usual_stochastic, hazard_rate, likelihood_ratio };
enum class Result { holds_leq, holds_geq, violated, inconclusive };

std::string_view to_string(Direction d);
std::string_view to_string(Relation r);  // "st", "hr", "lr"
std::string_view to_string(Result r);
Relation parse_relation(std::string_view text);
Result parse_result(std::string_view text);

/// Counts of grid points failing U <= V and U >= V, with the largest relative excess.
struct PointwiseSummary {
  std::size_t leq_failures = 0;
  std::size_t geq_failures = 0;
  double max_leq_excess = 0.0;
  double max_geq_excess = 0.0;
};

struct OrderingVerdict {
  Relation relation = Relation::usual_stochastic;
  Result result = Result::inconclusive;
  std::optional<MonotonicityReport> scan;
  std::optional<PointwiseSummary> pointwise;
  std::vector<double> witnesses;  ///< x values; nonempty whenever result is violated
  double tolerance = 0.0;
  std::size_t grid_points = 0;
  std::string grid;
  std::string diagnostics;
};

struct CheckOptions {
  double slope_tol = 1e-9;   ///< relative threshold for monotonicity scans
  double point_tol = 1e-10;  ///< relative threshold for pointwise inequalities
  unsigned workers = 1;
};

/// A verdict that flips when the tolerances are widened by this factor is
/// reported as inconclusive.
inline constexpr double kStraddleFactor = 10.0;

/// U <=st V iff min_sf(U) <= min_sf(V) on the grid.
OrderingVerdict check_usual_stochastic(const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                                       const Grid& grid, const CheckOptions& opts = {});

/// Both hr criteria: monotone sf_ratio and pointwise hazard dominance. They
/// must agree, otherwise the verdict is inconclusive.
OrderingVerdict check_hazard_rate(const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                                  const Grid& grid, const CheckOptions& opts = {});

/// U <=lr V iff pdf_V / pdf_U increases.
OrderingVerdict check_likelihood_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                                       const Grid& grid, const CheckOptions& opts = {});

OrderingVerdict check(Relation relation, const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                      const Grid& grid, const CheckOptions& opts = {});

/// Repeats `check` on successively doubled grids until three consecutive
/// results agree or `max_levels` grids have been tried.
OrderingVerdict check_refined(Relation relation, const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                              const Grid& grid, const CheckOptions& opts = {}, int max_levels = 5);

/// Classifies (1 - F2(x)^s) / (1 - F1(x)^s) over the grid, i.e. whether
/// X1^s <=hr X2^s where X_i^s has cdf F_i^s.
MonotonicityReport power_hr_premise(const ParentDistribution& f1, const ParentDistribution& f2, double s,
                                    const Grid& grid, double slope_tol = 1e-9);

}  // namespace kwg
