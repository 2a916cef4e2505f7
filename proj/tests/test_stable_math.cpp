#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "kwg/stable_math.hpp"
#include "support/oracles.hpp"

using namespace kwg;

TEST_CASE("log1mexp matches the long double formula across both branches") {
  for (double a : {-1e-300, -1e-20, -1e-8, -0.1, -0.69, -0.7, -1.0, -5.0, -40.0, -700.0}) {
    const long double ref = std::log1p(-std::exp(static_cast<long double>(a)));
    const long double ref_small = std::log(-std::expm1(static_cast<long double>(a)));
    const double want = static_cast<double>(a > -0.5 ? ref_small : ref);
    CHECK(log1mexp(a) == doctest::Approx(want).epsilon(1e-14));
  }
  CHECK(log1mexp(0.0) == -std::numeric_limits<double>::infinity());
  CHECK(log1mexp(-std::numeric_limits<double>::infinity()) == 0.0);
}

TEST_CASE("log1m_pow keeps precision near both ends") {
  // F = 0.5, s = 1: log(0.5)
  CHECK(log1m_pow(std::log(0.5), std::log(0.5), 1.0) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  // tiny F^s: log(1 - 1e-30) ~ -1e-30
  CHECK(log1m_pow(std::log(1e-15), std::log1p(-1e-15), 2.0) == doctest::Approx(-1e-30).epsilon(1e-12));
  // F close to 1: 1 - F^s ~ s (1 - F)
  const double log_sf = -800.0;
  CHECK(log1m_pow(std::log1p(-std::exp(log_sf)), log_sf, 3.0) == doctest::Approx(std::log(3.0) + log_sf));
  // moderate: compare against long double
  for (double F : {1e-6, 0.01, 0.3, 0.9, 0.999999}) {
    for (double s : {1e-3, 0.5, 1.0, 7.0}) {
      const long double ref = std::log1p(-std::pow(static_cast<long double>(F), static_cast<long double>(s)));
      CHECK(log1m_pow(std::log(F), std::log1p(-F), s) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-9));
    }
  }
}

TEST_CASE("pairwise_sum beats naive accumulation") {
  std::vector<double> v(1'000'000, 0.1);
  double naive = 0.0;
  for (double x : v) naive += x;
  const double exact = 100000.0;
  CHECK(std::abs(pairwise_sum(v) - exact) < std::abs(naive - exact));
  CHECK(pairwise_sum(v) == doctest::Approx(exact).epsilon(1e-13));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  CHECK(pairwise_sum(std::vector<double>{1.5}) == 1.5);
}

TEST_CASE("log_sum_exp handles extreme magnitudes") {
  CHECK(log_sum_exp(std::vector<double>{-1000.0, -1000.0}) == doctest::Approx(-1000.0 + std::log(2.0)));
  CHECK(log_sum_exp(std::vector<double>{1000.0, 0.0}) == doctest::Approx(1000.0));
  const double ninf = -std::numeric_limits<double>::infinity();
  CHECK(log_sum_exp(std::vector<double>{ninf, ninf}) == ninf);
  CHECK(log_sum_exp(std::vector<double>{}) == ninf);
  CHECK(log_sum_exp(std::vector<double>{ninf, 2.0}) == doctest::Approx(2.0));
}

TEST_CASE("scaled_log treats 0 * -inf as 0") {
  CHECK(scaled_log(0.0, -std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(scaled_log(2.0, std::log(0.5)) == doctest::Approx(2.0 * std::log(0.5)));
}
