#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kwg/montecarlo.hpp"
#include "kwg/ordering.hpp"
#include "kwg/scenario.hpp"

namespace kwg {

/// Settings shared by every subcommand.
struct RunOptions {
  std::optional<std::size_t> grid_points;  ///< overrides the scenario's point count
  bool refine = false;                     ///< double the grid until the verdict settles
  std::optional<double> tol;               ///< slope tolerance; pointwise tolerance is tol / 10
  unsigned workers = 1;
};

CheckOptions to_check_options(const RunOptions& opts);

/// The scenario's grid with the point-count override applied.
Grid scenario_grid(const Scenario& scenario, const RunOptions& opts);

/// One line, e.g. `lr: violated  scan=non_monotone witnesses=2 first=0.0421 ...`.
std::string format_verdict(const OrderingVerdict& verdict);

struct CheckRun {
  std::vector<OrderingVerdict> verdicts;  ///< in the scenario's relation order
  bool expectations_met = true;
  std::string report;
};

CheckRun run_check(const Scenario& scenario, const RunOptions& opts = {});

struct SimulationRun {
  std::vector<EmpiricalAgreement> agreements;  ///< one per requested relation
  bool agrees = true;
  std::string report;
};

/// Kolmogorov distances of both minima and the empirical st agreement for each
/// requested relation.
SimulationRun simulate(const Scenario& scenario, std::size_t size, std::uint64_t seed, const RunOptions& opts = {});

}  // namespace kwg
