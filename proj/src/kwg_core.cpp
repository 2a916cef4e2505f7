#include "kwg/kwg_core.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/stable_math.hpp"

namespace kwg {

KwGShape::KwGShape(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ParameterDomainError(
        fmt::format("Kw-G shape parameters must be positive, got alpha={} beta={}", alpha, beta));
  }
}

namespace {

// log(1 - F(x)^alpha)
double log_survival_base(const KwGShape& shape, const ParentDistribution& parent, double x) {
  return log1m_pow(parent.log_cdf(x), parent.log_sf(x), shape.alpha());
}

}  // namespace

double kwg_log_sf(const KwGShape& shape, const ParentDistribution& parent, double x) {
  return scaled_log(shape.beta(), log_survival_base(shape, parent, x));
}

double kwg_sf(const KwGShape& shape, const ParentDistribution& parent, double x) {
  return std::exp(kwg_log_sf(shape, parent, x));
}

double kwg_cdf(const KwGShape& shape, const ParentDistribution& parent, double x) {
  return -std::expm1(kwg_log_sf(shape, parent, x));
}

double kwg_log_pdf(const KwGShape& shape, const ParentDistribution& parent, double x) {
  const double log_cdf = parent.log_cdf(x);
  return std::log(shape.alpha()) + std::log(shape.beta()) +
         scaled_log(shape.alpha() - 1.0, log_cdf) + parent.log_pdf(x) +
         scaled_log(shape.beta() - 1.0, log1m_pow(log_cdf, parent.log_sf(x), shape.alpha()));
}

double kwg_pdf(const KwGShape& shape, const ParentDistribution& parent, double x) {
  return std::exp(kwg_log_pdf(shape, parent, x));
}

double kwg_log_hazard(const KwGShape& shape, const ParentDistribution& parent, double x) {
  const double log_cdf = parent.log_cdf(x);
  const double value = std::log(shape.alpha()) + std::log(shape.beta()) +
                       scaled_log(shape.alpha() - 1.0, log_cdf) + parent.log_pdf(x) -
                       log1m_pow(log_cdf, parent.log_sf(x), shape.alpha());
  if (std::isnan(value) || value == std::numeric_limits<double>::infinity()) {
    throw OverflowDomainError(fmt::format("hazard undefined at x={}", x), x);
  }
  return value;
}

double kwg_hazard(const KwGShape& shape, const ParentDistribution& parent, double x) {
  if (kwg_log_sf(shape, parent, x) < std::log(kSurvivalFloor)) {
    throw OverflowDomainError(fmt::format("Kw-G survival underflows at x={}", x), x);
  }
  return std::exp(kwg_log_hazard(shape, parent, x));
}

double kwg_quantile(const KwGShape& shape, const ParentDistribution& parent, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ParameterDomainError(fmt::format("Kw-G quantile needs 0 < p < 1, got {}", p));
  }
  // w = 1 - (1-p)^(1/beta), target = w^(1/alpha)
  const double w = shape.beta() == 1.0 ? p : -std::expm1(std::log1p(-p) / shape.beta());
  const double target = shape.alpha() == 1.0 ? w : std::exp(std::log(w) / shape.alpha());
  return parent.quantile(target);
}

}  // namespace kwg
