#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "kwg/montecarlo.hpp"

using namespace kwg;

TEST_CASE("substream seeds are distinct and reproducible") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_substream_seed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(derive_substream_seed(42, 7) == derive_substream_seed(42, 7));
  CHECK(derive_substream_seed(42, 7) != derive_substream_seed(43, 7));
}

TEST_CASE("uniform stream stays inside (0, 1)") {
  UniformStream s(1);
  for (int k = 0; k < 100000; ++k) {
    const double u = s.next();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("Kw(1,1) over the uniform parent returns the raw stream") {
  const auto batch = sample_kwg({1, 1}, make_uniform01(), 1000, 99);
  UniformStream raw(derive_substream_seed(99, 0));
  for (double d : batch.draws) CHECK(d == raw.next());
  CHECK(batch.seed == 99);
  CHECK(batch.size() == 1000);
}

TEST_CASE("sampling is deterministic") {
  const HeterogeneousSeries s(make_exponential(2), {6.2, 4.1, 2}, {1, 2, 3});
  CHECK(sample_min(s, 5000, 3).draws == sample_min(s, 5000, 3).draws);
  CHECK(sample_min(s, 5000, 3).draws != sample_min(s, 5000, 4).draws);
  CHECK(sample_kwg({2, 3}, make_uniform01(), 100, 5).draws == sample_kwg({2, 3}, make_uniform01(), 100, 5).draws);
}

TEST_CASE("a one-component minimum reproduces sample_kwg") {
  const auto p = make_weibull(1.5, 0.7);
  CHECK(sample_min(HeterogeneousSeries(p, {2.5}, {0.4}), 2000, 17).draws == sample_kwg({2.5, 0.4}, p, 2000, 17).draws);
}

TEST_CASE("empirical laws match the analytic ones") {
  const auto u = make_uniform01();
  const auto batch = sample_kwg({2, 3}, u, 100000, 1);
  CHECK(kolmogorov_distance(batch, [&](double x) { return kwg_cdf({2, 3}, u, x); }) < 0.01);

  const HeterogeneousSeries s(u, {1, 1}, {1, 2});
  auto draws = sample_min(s, 100000, 2).draws;
  std::sort(draws.begin(), draws.end());
  CHECK(std::abs(empirical_sf(draws, 0.5) - 0.125) < 0.005);

  const HeterogeneousSeries ce(make_exponential(1.3), {6.2, 4.1, 2}, {1, 2, 3});
  const auto mb = sample_min(ce, 100000, 3);
  CHECK(kolmogorov_distance(mb, [&](double x) { return 1.0 - min_sf(ce, x); }) < 0.01);
}

TEST_CASE("a wrong cdf is detected") {
  const auto u = make_uniform01();
  const auto batch = sample_kwg({2, 3}, u, 20000, 1);
  CHECK(kolmogorov_distance(batch, [&](double x) { return kwg_cdf({2, 2.5}, u, x); }) > 0.02);
}

TEST_CASE("empirical_sf and the DKW band") {
  const std::vector<double> sorted = {0.1, 0.2, 0.2, 0.5};
  CHECK(empirical_sf(sorted, 0.0) == 1.0);
  CHECK(empirical_sf(sorted, 0.2) == 0.25);
  CHECK(empirical_sf(sorted, 0.6) == 0.0);
  CHECK(dkw_band(100000) == doctest::Approx(std::sqrt(std::log(2.0 / 1e-3) / 200000.0)));
}

TEST_CASE("empirical order check") {
  const Grid g = Grid::through_quantile(make_exponential(2), 1e-3, 1 - 1e-3, 201);
  const HeterogeneousSeries u(make_exponential(2), {6.2, 4.1, 2}, {1, 2, 3});
  const HeterogeneousSeries v(make_exponential(1), {5.2, 5.1, 2}, {1, 2, 3});
  const auto a = empirical_order_check(Relation::usual_stochastic, u, v, 100000, 1, g);
  CHECK(a.analytic_st.result == Result::holds_leq);
  CHECK(a.empirical_leq);
  CHECK(a.agrees);
  CHECK(a.max_deviation <= a.band);

  const auto same = empirical_order_check(Relation::usual_stochastic, u, u, 100000, 1, g);
  CHECK(same.empirical_leq);
  CHECK(same.empirical_geq);
  CHECK(same.agrees);

  // crossing survival curves: empirical dominance fails in both directions
  const HeterogeneousSeries cu(make_weibull(0.5, 1), {1}, {1});
  const HeterogeneousSeries cv(make_weibull(3, 1), {1}, {1});
  const Grid cg = Grid::direct(0.05, 3.0, 200);
  const auto c = empirical_order_check(Relation::usual_stochastic, cu, cv, 100000, 1, cg);
  CHECK(c.analytic_st.result == Result::violated);
  CHECK_FALSE(c.empirical_leq);
  CHECK_FALSE(c.empirical_geq);
  CHECK_FALSE(c.witnesses.empty());
  CHECK(c.agrees);
}
