#pragma once

#include "kwg/parent_dist.hpp"

namespace kwg {

/// Shape pair of a Kw-G law, G(x) = 1 - (1 - F(x)^alpha)^beta.
class KwGShape {
 public:
  /// Throws ParameterDomainError unless both parameters are positive and finite.
  KwGShape(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  friend bool operator==(const KwGShape&, const KwGShape&) = default;

 private:
  double alpha_;
  double beta_;
};

double kwg_cdf(const KwGShape& shape, const ParentDistribution& parent, double x);
double kwg_sf(const KwGShape& shape, const ParentDistribution& parent, double x);
double kwg_log_sf(const KwGShape& shape, const ParentDistribution& parent, double x);
double kwg_pdf(const KwGShape& shape, const ParentDistribution& parent, double x);
double kwg_log_pdf(const KwGShape& shape, const ParentDistribution& parent, double x);

/// Hazard g/(1-G). Throws OverflowDomainError when the survival is below 1e-300.
double kwg_hazard(const KwGShape& shape, const ParentDistribution& parent, double x);

/// log hazard without the survival floor; used by the ordering checks, which
/// stay in log space throughout.
double kwg_log_hazard(const KwGShape& shape, const ParentDistribution& parent, double x);

/// Closed-form inverse: parent.quantile((1 - (1-p)^(1/beta))^(1/alpha)).
/// Throws ParameterDomainError unless 0 < p < 1.
double kwg_quantile(const KwGShape& shape, const ParentDistribution& parent, double p);

/// Smallest survival value for which kwg_hazard and min_hazard still answer.
inline constexpr double kSurvivalFloor = 1e-300;

}  // namespace kwg
