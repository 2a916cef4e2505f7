#include "kwg/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/stable_math.hpp"

namespace kwg {

namespace {

constexpr std::size_t kMaxWitnesses = 64;

int classify(double d, double threshold) {
  if (d > threshold) return 1;
  if (d < -threshold) return -1;
  return 0;
}

// Result implied by a scan of a function that increases when U <= V.
Result result_from_direction(Direction d) {
  switch (d) {
    case Direction::increasing:
    case Direction::constant: return Result::holds_leq;
    case Direction::decreasing: return Result::holds_geq;
    case Direction::non_monotone: return Result::violated;
  }
  return Result::inconclusive;
}

void require_same_support(const HeterogeneousSeries& u, const HeterogeneousSeries& v, const Grid& grid) {
  grid.require_inside(u.parent());
  grid.require_inside(v.parent());
}

OrderingVerdict base_verdict(Relation relation, const Grid& grid, double tolerance) {
  OrderingVerdict out;
  out.relation = relation;
  out.tolerance = tolerance;
  out.grid_points = grid.size();
  out.grid = grid.description();
  return out;
}

std::vector<double> witness_points(const MonotonicityReport& report) {
  std::vector<double> xs;
  for (const auto& w : report.witnesses) xs.push_back(w.x);
  return xs;
}

struct PointwiseResult {
  PointwiseSummary summary;
  std::vector<double> leq_failures;
  std::vector<double> geq_failures;
  bool leq_ok() const { return summary.leq_failures == 0; }
  bool geq_ok() const { return summary.geq_failures == 0; }
};

// Compares lhs <= rhs (and >=) in log space with a relative tolerance.
PointwiseResult compare_logs(std::span<const double> xs, std::span<const double> lhs,
                             std::span<const double> rhs, double tol) {
  PointwiseResult out;
  const double margin = std::log1p(tol);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (lhs[k] == rhs[k]) continue;
    const double diff = lhs[k] - rhs[k];
    if (diff > margin) {
      ++out.summary.leq_failures;
      out.summary.max_leq_excess = std::max(out.summary.max_leq_excess, std::expm1(diff));
      if (out.leq_failures.size() < kMaxWitnesses) out.leq_failures.push_back(xs[k]);
    }
    if (-diff > margin) {
      ++out.summary.geq_failures;
      out.summary.max_geq_excess = std::max(out.summary.max_geq_excess, std::expm1(-diff));
      if (out.geq_failures.size() < kMaxWitnesses) out.geq_failures.push_back(xs[k]);
    }
  }
  return out;
}

Result st_result(const PointwiseResult& p) {
  if (p.leq_ok()) return Result::holds_leq;
  if (p.geq_ok()) return Result::holds_geq;
  return Result::violated;
}

// Combination of the two hr criteria; inconclusive means they disagree.
Result hr_result(Direction scan, const PointwiseResult& hazards) {
  // hazards compares r_V <= r_U, so "leq" there is U <=hr V.
  switch (scan) {
    case Direction::constant:
      if (hazards.leq_ok()) return Result::holds_leq;
      if (hazards.geq_ok()) return Result::holds_geq;
      return Result::inconclusive;
    case Direction::increasing: return hazards.leq_ok() ? Result::holds_leq : Result::inconclusive;
    case Direction::decreasing: return hazards.geq_ok() ? Result::holds_geq : Result::inconclusive;
    case Direction::non_monotone:
      return !hazards.leq_ok() && !hazards.geq_ok() ? Result::violated : Result::inconclusive;
  }
  return Result::inconclusive;
}

}  // namespace

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::increasing: return "increasing";
    case Direction::decreasing: return "decreasing";
    case Direction::constant: return "constant";
    case Direction::non_monotone: return "non_monotone";
  }
  return "?";
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::usual_stochastic: return "st";
    case Relation::hazard_rate: return "hr";
    case Relation::likelihood_ratio: return "lr";
  }
  return "?";
}

std::string_view to_string(Result r) {
  switch (r) {
    case Result::holds_leq: return "holds_leq";
    case Result::holds_geq: return "holds_geq";
    case Result::violated: return "violated";
    case Result::inconclusive: return "inconclusive";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "st") return Relation::usual_stochastic;
  if (text == "hr") return Relation::hazard_rate;
  if (text == "lr") return Relation::likelihood_ratio;
  throw ParameterDomainError(fmt::format("unknown relation '{}' (expected st, hr or lr)", text));
}

Result parse_result(std::string_view text) {
  if (text == "holds_leq") return Result::holds_leq;
  if (text == "holds_geq") return Result::holds_geq;
  if (text == "violated") return Result::violated;
  if (text == "inconclusive") return Result::inconclusive;
  throw ParameterDomainError(fmt::format("unknown result '{}'", text));
}

std::vector<double> evaluate_on_grid(std::span<const double> xs, const std::function<double(double)>& f,
                                     unsigned workers) {
  std::vector<double> values(xs.size());
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double v = f(xs[k]);
      if (!std::isfinite(v)) {
        throw EvaluationError(fmt::format("non-finite value {} at x={}", v, xs[k]), xs[k]);
      }
      values[k] = v;
    }
  };

  const std::size_t chunks = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(xs.size(), 1));
  if (chunks == 1) {
    run(0, xs.size());
    return values;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t step = (xs.size() + chunks - 1) / chunks;
  for (std::size_t begin = 0; begin < xs.size(); begin += step) {
    jobs.push_back(std::async(std::launch::async, run, begin, std::min(xs.size(), begin + step)));
  }
  // Joining in index order makes the reported failure independent of scheduling.
  std::exception_ptr first_error;
  for (auto& job : jobs) {
    try {
      job.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return values;
}

MonotonicityReport monotonicity_scan(std::span<const double> xs, std::span<const double> values,
                                     double slope_tol) {
  if (xs.size() != values.size()) {
    throw DimensionError(fmt::format("scan got {} points but {} values", xs.size(), values.size()));
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw EvaluationError(fmt::format("non-finite value {} at x={}", values[k], xs[k]), xs[k]);
    }
  }

  MonotonicityReport report;
  double rise = 0.0;
  double fall = 0.0;
  int previous = 0;
  std::vector<int> signs(values.size() > 0 ? values.size() - 1 : 0);
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double d = values[k + 1] - values[k];
    const double scale = std::max({1.0, std::abs(values[k]), std::abs(values[k + 1])});
    const int sign = classify(d, slope_tol * scale);
    signs[k] = sign;
    if (sign > 0) rise += d;
    if (sign < 0) fall -= d;
    if (sign != 0) {
      if (previous != 0 && sign != previous && report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back({xs[k], sign});
      }
      previous = sign;
    }
  }

  if (rise > 0.0 && fall > 0.0) {
    report.direction = Direction::non_monotone;
    const int opposing = rise >= fall ? -1 : 1;
    for (std::size_t k = 0; k < signs.size(); ++k) {
      if (signs[k] == opposing) {
        report.max_violation = std::max(report.max_violation, std::abs(values[k + 1] - values[k]));
      }
    }
  } else if (rise > 0.0) {
    report.direction = Direction::increasing;
  } else if (fall > 0.0) {
    report.direction = Direction::decreasing;
  }
  return report;
}

MonotonicityReport monotonicity_scan(const std::function<double(double)>& f, const Grid& grid,
                                     double slope_tol, unsigned workers) {
  const auto values = evaluate_on_grid(grid.points(), f, workers);
  return monotonicity_scan(grid.points(), values, slope_tol);
}

OrderingVerdict check_usual_stochastic(const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                                       const Grid& grid, const CheckOptions& opts) {
  require_same_support(u, v, grid);
  const auto xs = grid.points();
  // Log survivals may legitimately be -inf only at a boundary, which a grid never touches.
  const auto lu = evaluate_on_grid(xs, [&](double x) { return min_log_sf(u, x); }, opts.workers);
  const auto lv = evaluate_on_grid(xs, [&](double x) { return min_log_sf(v, x); }, opts.workers);

  const auto sharp = compare_logs(xs, lu, lv, opts.point_tol);
  const auto loose = compare_logs(xs, lu, lv, opts.point_tol * kStraddleFactor);

  OrderingVerdict out = base_verdict(Relation::usual_stochastic, grid, opts.point_tol);
  out.pointwise = sharp.summary;
  out.result = st_result(sharp);
  if (st_result(loose) != out.result) {
    out.diagnostics = fmt::format("verdict {} at tol {} but {} at tol {}", to_string(out.result),
                                  opts.point_tol, to_string(st_result(loose)), opts.point_tol * kStraddleFactor);
    out.result = Result::inconclusive;
  }
  if (out.result == Result::violated) {
    out.witnesses = sharp.leq_failures;
    out.witnesses.insert(out.witnesses.end(), sharp.geq_failures.begin(), sharp.geq_failures.end());
    std::sort(out.witnesses.begin(), out.witnesses.end());
  }
  return out;
}

OrderingVerdict check_hazard_rate(const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                                  const Grid& grid, const CheckOptions& opts) {
  require_same_support(u, v, grid);
  const auto xs = grid.points();
  const auto mu = evaluate_on_grid(xs, [&](double x) { return min_log_sf(u, x); }, opts.workers);
  const auto mv = evaluate_on_grid(xs, [&](double x) { return min_log_sf(v, x); }, opts.workers);
  const auto hu = evaluate_on_grid(xs, [&](double x) { return min_log_hazard(u, x); }, opts.workers);
  const auto hv = evaluate_on_grid(xs, [&](double x) { return min_log_hazard(v, x); }, opts.workers);

  std::vector<double> ratio(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) ratio[k] = mv[k] - mu[k];

  const auto scan = monotonicity_scan(xs, ratio, opts.slope_tol);
  const auto loose_scan = monotonicity_scan(xs, ratio, opts.slope_tol * kStraddleFactor);
  // r_V <= r_U pointwise is the hazard form of U <=hr V.
  const auto hazards = compare_logs(xs, hv, hu, opts.point_tol);
  const auto loose_hazards = compare_logs(xs, hv, hu, opts.point_tol * kStraddleFactor);

  OrderingVerdict out = base_verdict(Relation::hazard_rate, grid, opts.point_tol);
  out.scan = scan;
  out.pointwise = hazards.summary;
  out.result = hr_result(scan.direction, hazards);
  const Result loose = hr_result(loose_scan.direction, loose_hazards);
  if (out.result == Result::inconclusive) {
    out.diagnostics = fmt::format("sf-ratio scan is {} but hazard dominance fails {} (U<=V) / {} (U>=V) points",
                                  to_string(scan.direction), hazards.summary.leq_failures,
                                  hazards.summary.geq_failures);
  } else if (loose != out.result) {
    out.diagnostics = fmt::format("verdict {} flips to {} under {}x wider tolerances", to_string(out.result),
                                  to_string(loose), kStraddleFactor);
    out.result = Result::inconclusive;
  }
  if (out.result == Result::violated) out.witnesses = witness_points(scan);
  return out;
}

OrderingVerdict check_likelihood_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                                       const Grid& grid, const CheckOptions& opts) {
  require_same_support(u, v, grid);
  const auto xs = grid.points();
  const auto values = evaluate_on_grid(xs, [&](double x) { return log_pdf_ratio(v, u, x); }, opts.workers);
  const auto scan = monotonicity_scan(xs, values, opts.slope_tol);
  const auto loose = monotonicity_scan(xs, values, opts.slope_tol * kStraddleFactor);

  OrderingVerdict out = base_verdict(Relation::likelihood_ratio, grid, opts.slope_tol);
  out.scan = scan;
  out.result = result_from_direction(scan.direction);
  if (result_from_direction(loose.direction) != out.result) {
    out.diagnostics = fmt::format("density-ratio scan is {} at tol {} but {} at tol {}", to_string(scan.direction),
                                  opts.slope_tol, to_string(loose.direction), opts.slope_tol * kStraddleFactor);
    out.result = Result::inconclusive;
  }
  if (out.result == Result::violated) out.witnesses = witness_points(scan);
  return out;
}

OrderingVerdict check(Relation relation, const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                      const Grid& grid, const CheckOptions& opts) {
  switch (relation) {
    case Relation::usual_stochastic: return check_usual_stochastic(u, v, grid, opts);
    case Relation::hazard_rate: return check_hazard_rate(u, v, grid, opts);
    case Relation::likelihood_ratio: return check_likelihood_ratio(u, v, grid, opts);
  }
  throw ParameterDomainError("unknown relation");
}

OrderingVerdict check_refined(Relation relation, const HeterogeneousSeries& u, const HeterogeneousSeries& v,
                              const Grid& grid, const CheckOptions& opts, int max_levels) {
  std::vector<Result> history;
  Grid current = grid;
  OrderingVerdict verdict = check(relation, u, v, current, opts);
  history.push_back(verdict.result);
  for (int level = 1; level < max_levels; ++level) {
    const std::size_t m = history.size();
    if (m >= 3 && history[m - 1] == history[m - 2] && history[m - 2] == history[m - 3]) break;
    current = current.refined();
    verdict = check(relation, u, v, current, opts);
    history.push_back(verdict.result);
  }
  const std::size_t m = history.size();
  const bool stable = m >= 3 && history[m - 1] == history[m - 2] && history[m - 2] == history[m - 3];
  std::string trail;
  for (Result r : history) trail += fmt::format("{}{}", trail.empty() ? "" : " -> ", to_string(r));
  if (!verdict.diagnostics.empty()) verdict.diagnostics += "; ";
  verdict.diagnostics += fmt::format("refinement {} ({})", stable ? "stable" : "unstable", trail);
  return verdict;
}

MonotonicityReport power_hr_premise(const ParentDistribution& f1, const ParentDistribution& f2, double s,
                                    const Grid& grid, double slope_tol) {
  if (!(s > 0.0)) throw ParameterDomainError(fmt::format("power s must be positive, got {}", s));
  grid.require_inside(f1);
  grid.require_inside(f2);
  const auto xs = grid.points();
  std::vector<double> values(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double x = xs[k];
    values[k] = log1m_pow(f2.log_cdf(x), f2.log_sf(x), s) - log1m_pow(f1.log_cdf(x), f1.log_sf(x), s);
  }
  return monotonicity_scan(xs, values, slope_tol);
}

}  // namespace kwg
