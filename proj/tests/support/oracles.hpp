#pragma once

// Reference evaluations used only by the tests. They share no code with the
// library: plain formulas in long double, central differences and brute-force
// prefix sums.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using ld = long double;

/// Two-parameter Kumaraswamy cdf 1 - (1 - x^a)^b on (0, 1).
inline ld kw_cdf(ld a, ld b, ld x) { return 1.0L - std::pow(1.0L - std::pow(x, a), b); }

/// Kw-G survival over a parent cdf value F.
inline ld kwg_sf(ld a, ld b, ld F) { return std::pow(1.0L - std::pow(F, a), b); }

/// Kw-G density from parent cdf and pdf values.
inline ld kwg_pdf(ld a, ld b, ld F, ld f) {
  return a * b * std::pow(F, a - 1.0L) * f * std::pow(1.0L - std::pow(F, a), b - 1.0L);
}

inline ld exp_cdf(ld rate, ld x) { return -std::expm1(-rate * x); }
inline ld weibull_cdf(ld k, ld c, ld x) { return -std::expm1(-c * std::pow(x, k)); }

/// Survival of the minimum, as a plain product.
inline ld min_sf(const std::vector<double>& a, const std::vector<double>& b, ld F) {
  ld p = 1.0L;
  for (std::size_t i = 0; i < a.size(); ++i) p *= kwg_sf(a[i], b[i], F);
  return p;
}

/// Central difference with a step scaled to x; `h` is the relative step.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-6) {
  const double step = h * std::max(1.0, std::abs(x));
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

/// |a - b| <= max(abs_tol, rel_tol * |b|)
inline bool close(double a, double b, double abs_tol, double rel_tol) {
  return std::abs(a - b) <= std::max(abs_tol, rel_tol * std::abs(b));
}

/// Prefix sums of the increasing rearrangement.
inline std::vector<double> sorted_prefix(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::partial_sum(v.begin(), v.end(), v.begin());
  return v;
}

/// x majorizes y by brute force on prefix sums (exact totals within rel 1e-12).
inline bool majorizes(const std::vector<double>& x, const std::vector<double>& y) {
  const auto px = sorted_prefix(x);
  const auto py = sorted_prefix(y);
  const double tol = 1e-12 * static_cast<double>(x.size()) * std::max(px.back(), py.back());
  if (std::abs(px.back() - py.back()) > tol) return false;
  for (std::size_t j = 0; j + 1 < px.size(); ++j) {
    if (px[j] > py[j] + tol) return false;
  }
  return true;
}

/// Sign pattern of successive differences: +1 increasing, -1 decreasing, 0 mixed/flat.
inline int monotone_sign(const std::vector<double>& v) {
  bool up = false, down = false;
  for (std::size_t k = 1; k < v.size(); ++k) {
    up = up || v[k] > v[k - 1];
    down = down || v[k] < v[k - 1];
  }
  if (up && !down) return 1;
  if (down && !up) return -1;
  return 0;
}

}  // namespace oracle
