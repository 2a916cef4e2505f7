#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kwg/errors.hpp"
#include "kwg/figures.hpp"
#include "support/oracles.hpp"

using namespace kwg;

namespace {

/// Parses the CSV back into columns, checking the header and row format.
std::pair<std::vector<double>, std::vector<double>> read_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "t,value");
  std::vector<double> t, v;
  while (std::getline(in, line)) {
    REQUIRE(line.find('\r') == std::string::npos);
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    t.push_back(std::stod(line.substr(0, comma)));
    v.push_back(std::stod(line.substr(comma + 1)));
  }
  return {t, v};
}

}  // namespace

TEST_CASE("figure ids") {
  for (const char* id : {"3.1", "3.2i", "3.2ii", "4.1i", "4.1ii", "4.2"}) CHECK(to_string(parse_figure_id(id)) == id);
  CHECK_THROWS_AS(parse_figure_id("3.3"), ParameterDomainError);
  CHECK_THROWS_AS(parse_figure_id(""), ParameterDomainError);
}

TEST_CASE("density-ratio curves are non-monotone") {
  for (FigureId id : {FigureId::f3_1, FigureId::f3_2i, FigureId::f3_2ii}) {
    CAPTURE(to_string(id));
    const FigureData f = reproduce(id);
    CHECK(f.t.size() == 2001);
    CHECK(f.scan.direction == Direction::non_monotone);
    CHECK(f.claim_holds());
    CHECK(f.verdict_line().find("-> reproduced") != std::string::npos);
    const auto [t, v] = read_csv(f.csv());
    CHECK(t.size() == 2001);
    CHECK(oracle::monotone_sign(v) == 0);
    for (std::size_t k = 0; k < t.size(); ++k) {
      CHECK(t[k] == f.t[k]);
      CHECK(v[k] == f.value[k]);
    }
  }
}

TEST_CASE("three-component density ratio matches a direct evaluation") {
  const FigureData f = reproduce(FigureId::f3_1, 101);
  const std::vector<double> a = {6.2, 4.1, 2}, g = {5.2, 5.1, 2}, b = {1, 2, 3};
  for (std::size_t k = 0; k < f.t.size(); k += 10) {
    const double u = f.t[k];
    long double pu = 0, pv = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      pu += oracle::kwg_pdf(a[i], b[i], u, 1.0L) / oracle::kwg_sf(a[i], b[i], u);
      pv += oracle::kwg_pdf(g[i], b[i], u, 1.0L) / oracle::kwg_sf(g[i], b[i], u);
    }
    const long double ratio = (pu * oracle::min_sf(a, b, u)) / (pv * oracle::min_sf(g, b, u));
    CHECK(f.value[k] == doctest::Approx(static_cast<double>(ratio)).epsilon(1e-9));
  }
}

TEST_CASE("y-grid curves") {
  const FigureData f42 = reproduce(FigureId::f4_2);
  CHECK(f42.scan.direction == Direction::increasing);
  CHECK(f42.claim_holds());
  CHECK(f42.t.front() > f42.t.back());  // y decreases while x increases
  CHECK(f42.x.front() == doctest::Approx(-std::log(f42.t.front())));

  CHECK(reproduce(FigureId::f4_1ii).scan.direction == Direction::non_monotone);
  CHECK(reproduce(FigureId::f4_1ii).claim_holds());

  // at s = 0.02 the first point of the default grid already sits past the dip
  const FigureData f41 = reproduce(FigureId::f4_1i);
  CHECK(f41.scan.direction == Direction::non_monotone);
  CHECK_FALSE(f41.claim_holds());
  CHECK(f41.verdict_line().find("NOT reproduced") != std::string::npos);
  REQUIRE(f41.scan.witnesses.size() == 1);
  CHECK(f41.scan.witnesses[0].x == doctest::Approx(f41.x[1]));
  std::vector<double> rest(f41.value.begin() + 1, f41.value.end());
  CHECK(oracle::monotone_sign(rest) == 1);
}

TEST_CASE("reproduction is deterministic") {
  CHECK(reproduce(FigureId::f3_2ii).csv() == reproduce(FigureId::f3_2ii).csv());
  CHECK(reproduce(FigureId::f4_2, 64).csv().size() < reproduce(FigureId::f4_2).csv().size());
}
