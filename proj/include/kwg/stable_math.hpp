#pragma once

#include <span>

namespace kwg {

/// log(1 - exp(a)) for a <= 0, switching between expm1 and log1p forms at -ln 2.
double log1mexp(double a);

/// log(1 - F^s) given log F and log(1 - F) of the same point.
///
/// When 1 - F is below exp(-700) the cdf has already rounded to one, so the
/// first-order form log(s) + log(1 - F) is used instead.
double log1m_pow(double log_cdf, double log_sf, double s);

/// Pairwise (cascade) summation; error grows as O(log n) instead of O(n).
double pairwise_sum(std::span<const double> values);

/// log(sum exp(v_i)); returns -inf for an empty span or all -inf entries.
double log_sum_exp(std::span<const double> log_values);

/// coef * log_value with the convention 0 * (-inf) = 0.
inline double scaled_log(double coef, double log_value) {
  return coef == 0.0 ? 0.0 : coef * log_value;
}

}  // namespace kwg
