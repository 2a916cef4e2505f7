// Command-line front end: scenario checks, built-in figures, theorem suites and
// Monte Carlo cross-checks. Exit status: 0 all expectations met, 1 mismatch,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/figures.hpp"
#include "kwg/runner.hpp"
#include "kwg/scenario.hpp"
#include "kwg/theorems.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out << text;
  if (!out) throw std::runtime_error(fmt::format("failed writing '{}'", path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic-order checks for minima of Kumaraswamy-G samples"};
  app.require_subcommand(1);

  kwg::RunOptions run;
  std::size_t grid_points = 0;
  double tol = 0.0;
  app.add_option("--grid-points", grid_points, "Grid size (default 2001, or the scenario's grid.points)")
      ->check(CLI::Range(static_cast<std::size_t>(kwg::kMinGridPoints), static_cast<std::size_t>(100000000)));
  app.add_flag("--refine", run.refine, "Double the grid until the verdict is stable");
  app.add_option("--tol", tol, "Relative slope tolerance (pointwise tolerance is tol/10)")
      ->check(CLI::PositiveNumber);

  std::string scenario_path;
  auto* check_cmd = app.add_subcommand("check", "Check the orderings requested by a scenario file");
  check_cmd->add_option("scenario", scenario_path, "Scenario file")->required();

  std::string figure_id;
  std::string figure_out;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Write the CSV of a built-in curve and its verdict");
  reproduce_cmd->add_option("figure", figure_id, "3.1, 3.2i, 3.2ii, 4.1i, 4.1ii or 4.2")->required();
  reproduce_cmd->add_option("--out", figure_out, "CSV path (default figure-<id>.csv)");

  std::string theorem_id;
  std::size_t trials = 200;
  std::uint64_t verify_seed = 0;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run random hypothesis-satisfying trials of an ordering result");
  verify_cmd->add_option("theorem", theorem_id, "3.1 ... 4.4, optionally with a branch suffix like 3.2i")->required();
  verify_cmd->add_option("--trials", trials, "Number of trials")->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Seed")->capture_default_str();
  verify_cmd->add_option("--threads", threads, "Worker threads (0: all cores); output does not depend on it");

  std::size_t sample_size = 100000;
  std::optional<std::uint64_t> sim_seed;
  auto* simulate_cmd = app.add_subcommand("simulate", "Compare sampled minima with the analytic survival curves");
  simulate_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  simulate_cmd->add_option("--size", sample_size, "Draws per minimum")->capture_default_str();
  simulate_cmd->add_option("--seed", sim_seed, "Seed (default: the scenario's seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (grid_points > 0) run.grid_points = grid_points;
  if (tol > 0.0) run.tol = tol;

  try {
    if (*check_cmd) {
      const kwg::Scenario scenario = kwg::load_scenario(scenario_path);
      const kwg::CheckRun result = kwg::run_check(scenario, run);
      std::cout << result.report;
      if (!scenario.output.empty()) write_file(scenario.output, result.report);
      return result.expectations_met ? 0 : kExitMismatch;
    }
    if (*reproduce_cmd) {
      const kwg::FigureId id = kwg::parse_figure_id(figure_id);
      const kwg::FigureData fig =
          kwg::reproduce(id, run.grid_points.value_or(2001), kwg::to_check_options(run).slope_tol);
      const std::string path = figure_out.empty() ? fmt::format("figure-{}.csv", figure_id) : figure_out;
      write_file(path, fig.csv());
      write_file(path + ".verdict", fig.verdict_line() + "\n");
      std::cout << fig.verdict_line() << "\n";
      return fig.claim_holds() ? 0 : kExitMismatch;
    }
    if (*verify_cmd) {
      kwg::SuiteOptions suite;
      suite.threads = threads;
      const kwg::SuiteReport report = kwg::verify_theorem(theorem_id, trials, verify_seed, run, suite);
      std::cout << report.text();
      return report.all_passed() ? 0 : kExitMismatch;
    }
    if (*simulate_cmd) {
      const kwg::Scenario scenario = kwg::load_scenario(scenario_path);
      const kwg::SimulationRun result = kwg::simulate(scenario, sample_size, sim_seed.value_or(scenario.seed), run);
      std::cout << result.report;
      if (!scenario.output.empty()) write_file(scenario.output, result.report);
      return result.agrees ? 0 : kExitMismatch;
    }
  } catch (const kwg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kwg::ParameterDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
