#include <doctest.h>

#include <filesystem>

#include "kwg/errors.hpp"
#include "kwg/runner.hpp"

using namespace kwg;

namespace {
const std::filesystem::path kData = KWG_TEST_DATA;
}

TEST_CASE("tolerance flag sets both tolerances") {
  RunOptions o;
  CHECK(to_check_options(o).slope_tol == 1e-9);
  CHECK(to_check_options(o).point_tol == 1e-10);
  o.tol = 1e-6;
  CHECK(to_check_options(o).slope_tol == 1e-6);
  CHECK(to_check_options(o).point_tol == doctest::Approx(1e-7));
  o.tol = -1.0;
  CHECK_THROWS_AS(to_check_options(o), ParameterDomainError);
}

TEST_CASE("run_check meets declared expectations") {
  for (const char* file : {"ce3_1.scn", "identical.scn", "outlier.scn", "two_parents.scn", "weibull_y.scn"}) {
    CAPTURE(file);
    const CheckRun run = run_check(load_scenario(kData / file));
    CHECK(run.expectations_met);
    CHECK(run.report.find("expectations met") != std::string::npos);
  }
  const CheckRun ce = run_check(load_scenario(kData / "ce3_1.scn"));
  REQUIRE(ce.verdicts.size() == 3);
  CHECK(ce.verdicts[2].result == Result::violated);
  CHECK(ce.report.find("lr: violated") != std::string::npos);
}

TEST_CASE("run_check flags a wrong expectation") {
  const CheckRun run = run_check(load_scenario(kData / "wrong_expectation.scn"));
  CHECK_FALSE(run.expectations_met);
  CHECK(run.report.find("MISMATCH") != std::string::npos);
}

TEST_CASE("grid override and refinement") {
  RunOptions o;
  o.grid_points = 64;
  const CheckRun coarse = run_check(load_scenario(kData / "identical.scn"), o);
  CHECK(coarse.verdicts[0].grid_points == 64);
  o.refine = true;
  const CheckRun fine = run_check(load_scenario(kData / "ce3_1.scn"), o);
  CHECK(fine.verdicts[2].result == Result::violated);
  CHECK(fine.verdicts[2].grid_points >= 4 * 64 - 3);
}

TEST_CASE("simulate agrees with the analytic verdicts and is deterministic") {
  const Scenario s = load_scenario(kData / "two_parents.scn");
  const SimulationRun a = simulate(s, 50000, s.seed);
  const SimulationRun b = simulate(s, 50000, s.seed);
  CHECK(a.agrees);
  CHECK(a.report == b.report);
  CHECK(simulate(s, 50000, s.seed + 1).report != a.report);
  CHECK_THROWS_AS(simulate(s, 0, 1), ParameterDomainError);
}
