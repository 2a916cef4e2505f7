#include <doctest.h>

#include <cmath>

#include "kwg/errors.hpp"
#include "kwg/grid.hpp"

using namespace kwg;

TEST_CASE("grid kinds map parameters to increasing points") {
  const auto e = make_exponential(2.0);
  const Grid x = Grid::direct(0.5, 3.0, 16);
  CHECK(x.size() == 16);
  CHECK(x.points().front() == 0.5);
  CHECK(x.points().back() == 3.0);

  const Grid u = Grid::through_quantile(e, 1e-6, 1.0 - 1e-6, 2001);
  CHECK(u.size() == 2001);
  CHECK(u.points()[1000] == doctest::Approx(e.quantile(0.5)));
  CHECK(u.params()[1000] == doctest::Approx(0.5));

  const Grid y = Grid::log_substitution(1e-6, 1.0 - 1e-6, 101);
  CHECK(y.params().front() == doctest::Approx(1.0 - 1e-6));
  CHECK(y.params().back() == doctest::Approx(1e-6));
  CHECK(y.points().front() == doctest::Approx(-std::log(1.0 - 1e-6)));
  CHECK(y.points().back() == doctest::Approx(-std::log(1e-6)));

  for (const Grid* g : {&x, &u, &y}) {
    for (std::size_t k = 1; k < g->size(); ++k) CHECK(g->points()[k] > g->points()[k - 1]);
  }
}

TEST_CASE("make dispatches on the spec") {
  const auto u = make_uniform01();
  const Grid g = Grid::make(GridSpec{}, u);
  CHECK(g.size() == 2001);
  CHECK(g.description() == "u[1e-06,0.999999]x2001 via uniform01");
  CHECK(Grid::make({GridKind::log_substitution, 1e-6, 1.0 - 1e-6, 64}, u).description().starts_with("y["));
  CHECK(parse_grid_kind("x") == GridKind::direct);
  CHECK(parse_grid_kind("u") == GridKind::quantile);
  CHECK(parse_grid_kind("y") == GridKind::log_substitution);
  CHECK_THROWS_AS(parse_grid_kind("z"), ParameterDomainError);
}

TEST_CASE("refinement nests the old points") {
  const Grid g = Grid::through_quantile(make_weibull(4.4, 3), 0.01, 0.99, 17);
  const Grid r = g.refined();
  REQUIRE(r.size() == 33);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(r.points()[2 * k] == g.points()[k]);
  const Grid y = Grid::log_substitution(0.1, 0.9, 16).refined();
  CHECK(y.size() == 31);
}

TEST_CASE("invalid grids are rejected") {
  const auto u = make_uniform01();
  CHECK_THROWS_AS(Grid::direct(0.0, 1.0, kMinGridPoints - 1), ParameterDomainError);
  CHECK_THROWS_AS(Grid::direct(1.0, 1.0, 20), ParameterDomainError);
  CHECK_THROWS_AS(Grid::through_quantile(u, 0.0, 0.5, 20), ParameterDomainError);
  CHECK_THROWS_AS(Grid::through_quantile(u, 0.5, 1.0, 20), ParameterDomainError);
  CHECK_THROWS_AS(Grid::log_substitution(0.0, 0.5, 20), ParameterDomainError);
  CHECK_THROWS_AS(Grid::direct(-1.0, 0.5, 20).require_inside(u), ParameterDomainError);
  CHECK_NOTHROW(Grid::direct(0.1, 0.5, 20).require_inside(u));
  CHECK_THROWS_AS(Grid::log_substitution(1e-6, 0.5, 20).require_inside(u), ParameterDomainError);
}
