#include "kwg/figures.hpp"

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/stable_math.hpp"

namespace kwg {

namespace {

constexpr double kLo = 1e-6;
constexpr double kHi = 1.0 - 1e-6;

struct PdfRatioCase {
  std::vector<double> alphas, betas, gammas, deltas;
};

PdfRatioCase pdf_case(FigureId id) {
  switch (id) {
    case FigureId::f3_1:
      return {{6.2, 4.1, 2}, {1, 2, 3}, {5.2, 5.1, 2}, {1, 2, 3}};
    case FigureId::f3_2i:
      return {{5, 1, 0.01}, {0.005, 0.004, 0.001}, {5, 1, 0.01}, {0.0045, 0.0045, 0.001}};
    default:
      return {{5, 1, 0.01}, {0.003, 0.004, 0.005}, {5, 1, 0.01}, {0.0035, 0.0035, 0.005}};
  }
}

}  // namespace

FigureId parse_figure_id(std::string_view text) {
  for (FigureId id : {FigureId::f3_1, FigureId::f3_2i, FigureId::f3_2ii, FigureId::f4_1i, FigureId::f4_1ii,
                      FigureId::f4_2}) {
    if (text == to_string(id)) return id;
  }
  throw ParameterDomainError(fmt::format("unknown figure id '{}' (expected 3.1, 3.2i, 3.2ii, 4.1i, 4.1ii or 4.2)", text));
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::f3_1: return "3.1";
    case FigureId::f3_2i: return "3.2i";
    case FigureId::f3_2ii: return "3.2ii";
    case FigureId::f4_1i: return "4.1i";
    case FigureId::f4_1ii: return "4.1ii";
    case FigureId::f4_2: return "4.2";
  }
  return "?";
}

std::string FigureData::csv() const {
  std::string out = "t,value\n";
  for (std::size_t k = 0; k < t.size(); ++k) out += fmt::format("{:.17g},{:.17g}\n", t[k], value[k]);
  return out;
}

std::string FigureData::verdict_line() const {
  return fmt::format("figure {}: {} over {} is {} (claim: {}) -> {}", to_string(id), value_name, t_name,
                     to_string(scan.direction), to_string(claimed), claim_holds() ? "reproduced" : "NOT reproduced");
}

FigureData reproduce(FigureId id, std::size_t points, double slope_tol) {
  FigureData out;
  out.id = id;
  const ParentDistribution w1 = make_weibull(4.4, 3);
  const ParentDistribution w2 = make_weibull(0.4, 0.2);

  std::function<double(double)> f;
  Grid grid = Grid::log_substitution(kLo, kHi, points);
  switch (id) {
    case FigureId::f3_1:
    case FigureId::f3_2i:
    case FigureId::f3_2ii: {
      const PdfRatioCase c = pdf_case(id);
      const ParentDistribution uniform = make_uniform01();
      const HeterogeneousSeries u(uniform, c.alphas, c.betas);
      const HeterogeneousSeries v(uniform, c.gammas, c.deltas);
      grid = Grid::through_quantile(uniform, kLo, kHi, points);
      f = [u, v](double x) { return pdf_ratio(u, v, x); };
      out.t_name = "u";
      out.value_name = "pdf ratio U/V";
      out.claimed = Direction::non_monotone;
      break;
    }
    case FigureId::f4_1i:
    case FigureId::f4_1ii: {
      const double s = id == FigureId::f4_1i ? 0.02 : 1.98;
      f = [w1, w2, s](double x) {
        return log1m_pow(w2.log_cdf(x), w2.log_sf(x), s) - log1m_pow(w1.log_cdf(x), w1.log_sf(x), s);
      };
      out.t_name = "y";
      out.value_name = fmt::format("log (1 - F2^s)/(1 - F1^s) at s={}", s);
      out.claimed = id == FigureId::f4_1i ? Direction::increasing : Direction::non_monotone;
      break;
    }
    case FigureId::f4_2: {
      const HeterogeneousSeries u(w1, {1.99, 0.01}, {1, 2});
      const HeterogeneousSeries v(w2, {1.98, 0.02}, {1, 2});
      f = [u, v](double x) { return log_sf_ratio(u, v, x); };
      out.t_name = "y";
      out.value_name = "log survival ratio V/U";
      out.claimed = Direction::increasing;
      break;
    }
  }
  out.t.assign(grid.params().begin(), grid.params().end());
  out.x.assign(grid.points().begin(), grid.points().end());
  out.value = evaluate_on_grid(grid.points(), f);
  out.scan = monotonicity_scan(grid.points(), out.value, slope_tol);
  return out;
}

}  // namespace kwg
