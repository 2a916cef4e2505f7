#include "kwg/runner.hpp"

#include <fmt/format.h>

#include "kwg/errors.hpp"

namespace kwg {

CheckOptions to_check_options(const RunOptions& opts) {
  CheckOptions out;
  if (opts.tol) {
    if (!(*opts.tol > 0.0)) throw ParameterDomainError("tolerance must be positive");
    out.slope_tol = *opts.tol;
    out.point_tol = *opts.tol / 10.0;
  }
  out.workers = opts.workers == 0 ? 1 : opts.workers;
  return out;
}

Grid scenario_grid(const Scenario& scenario, const RunOptions& opts) {
  GridSpec spec = scenario.grid;
  if (opts.grid_points) spec.points = *opts.grid_points;
  return Grid::make(spec, scenario.u.parent());
}

std::string format_verdict(const OrderingVerdict& v) {
  std::string out = fmt::format("{}: {}", to_string(v.relation), to_string(v.result));
  if (v.scan) {
    out += fmt::format("  scan={} max_violation={:.3g}", to_string(v.scan->direction), v.scan->max_violation);
  }
  if (v.pointwise) {
    out += fmt::format("  leq_failures={} geq_failures={}", v.pointwise->leq_failures, v.pointwise->geq_failures);
  }
  out += fmt::format("  witnesses={}", v.witnesses.size());
  if (!v.witnesses.empty()) out += fmt::format(" first={:.6g}", v.witnesses.front());
  out += fmt::format("  tol={} grid={}", v.tolerance, v.grid);
  if (!v.diagnostics.empty()) out += fmt::format("  note: {}", v.diagnostics);
  return out;
}

CheckRun run_check(const Scenario& scenario, const RunOptions& opts) {
  const CheckOptions copts = to_check_options(opts);
  const Grid grid = scenario_grid(scenario, opts);
  grid.require_inside(scenario.v.parent());

  CheckRun run;
  run.report = fmt::format("scenario {}\n", scenario.name);
  for (Relation rel : scenario.relations) {
    OrderingVerdict v = opts.refine ? check_refined(rel, scenario.u, scenario.v, grid, copts)
                                    : check(rel, scenario.u, scenario.v, grid, copts);
    run.report += "  " + format_verdict(v);
    if (const auto it = scenario.expect.find(rel); it != scenario.expect.end()) {
      const bool ok = it->second == v.result;
      run.expectations_met = run.expectations_met && ok;
      run.report += fmt::format("  [expected {}: {}]", to_string(it->second), ok ? "ok" : "MISMATCH");
    }
    run.report += "\n";
    run.verdicts.push_back(std::move(v));
  }
  run.report += fmt::format("expectations {}\n", run.expectations_met ? "met" : "not met");
  return run;
}

SimulationRun simulate(const Scenario& scenario, std::size_t size, std::uint64_t seed, const RunOptions& opts) {
  if (size == 0) throw ParameterDomainError("sample size must be at least 1");
  const CheckOptions copts = to_check_options(opts);
  const Grid grid = scenario_grid(scenario, opts);
  grid.require_inside(scenario.v.parent());

  SimulationRun run;
  run.report = fmt::format("scenario {} size={} seed={}\n", scenario.name, size, seed);
  for (Relation rel : scenario.relations) {
    EmpiricalAgreement a = empirical_order_check(rel, scenario.u, scenario.v, size, seed, grid, copts);
    if (run.agreements.empty()) {
      run.report += fmt::format("  ks_u={:.6f} ks_v={:.6f} band={:.6f}\n", a.ks_u, a.ks_v, a.band);
    }
    run.report += fmt::format("  {}: analytic {} implies st {}; empirical leq={} geq={} max_deviation={:.6f} {}\n",
                              to_string(rel), to_string(a.analytic_relation.result),
                              to_string(a.analytic_st.result), a.empirical_leq, a.empirical_geq,
                              a.max_deviation, a.agrees ? "agrees" : "DISAGREES");
    run.agrees = run.agrees && a.agrees;
    run.agreements.push_back(std::move(a));
  }
  run.report += fmt::format("empirical check {}\n", run.agrees ? "agrees" : "disagrees");
  return run;
}

}  // namespace kwg
