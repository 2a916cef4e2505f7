#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kwg/majorization.hpp"
#include "kwg/ordering.hpp"

namespace kwg {

// Scalar building blocks of the hazard-rate comparisons. In all of them u plays
// the role of F(x) and must lie in (0, 1); s > 0. Domain violations throw
// ParameterDomainError.

/// s t u^s / (1 - u^s)
double phi(double s, double t, double u);
/// 1 + s log(u) / (1 - u^s)
double phi1(double s, double u);
/// s / (1 - u^s)
double phi2(double s, double u);
/// d phi2 / ds = (1 - u^s + s u^s log u) / (1 - u^s)^2
double phi2_ds(double s, double u);
/// s u^s (1 - u^s + s u^s log u) / (1 - u^s)^3, equal to phi(s,1,u) * phi2_ds(s,u)
double phi3(double s, double u);
/// Per-component hazard factor s u^(s-1) / (1 - u^s) of the minimum under a uniform parent.
double hazard_factor(double s, double u);

/// Weighted average of phi2(alpha_k, u) with weights phi(alpha_k, beta_k, u).
/// Throws DimensionError on a length mismatch.
double psi(const ShapeVector& alphas, const ShapeVector& betas, double u);

/// One monotonicity/sign property checked over an (s, u) grid.
struct LemmaCheck {
  std::string name;
  bool passed = true;
  double worst_violation = 0.0;
  std::optional<double> witness_s;
  std::optional<double> witness_u;
};

struct LemmaSuiteReport {
  std::vector<LemmaCheck> checks;
  /// Direction in s of d phi/ds = phi * phi1 / s at the middle u; informational only.
  Direction dphi_ds_direction = Direction::constant;

  bool all_passed() const;
  const LemmaCheck* find(const std::string& name) const;
};

/// Checks that f(., u) moves in `expected` direction (increasing or decreasing)
/// for every u in u_grid; flat stretches are allowed.
LemmaCheck check_direction_in_s(std::string name, const std::function<double(double, double)>& f,
                                Direction expected, std::span<const double> s_grid,
                                std::span<const double> u_grid, double slope_tol = 1e-9);

/// Runs every monotonicity, sign and convexity property of phi, phi1, phi2,
/// phi3 and hazard_factor. Failures are reported, never thrown.
LemmaSuiteReport lemma_monotonicity_suite(std::span<const double> s_grid, std::span<const double> u_grid,
                                          double slope_tol = 1e-9);

/// `count` log-spaced points in [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t count);
/// `count` equally spaced interior points of (0, 1): k / (count + 1).
std::vector<double> interior_unit_grid(std::size_t count);

enum class SchurEvidence { schur_convex, schur_concave, both, neither };

std::string_view to_string(SchurEvidence e);

struct SchurCheck {
  SchurEvidence evidence = SchurEvidence::neither;
  /// (x_i - x_j)(df/dx_i - df/dx_j) for every pair i < j, row-major.
  std::vector<double> pair_terms;
  double threshold = 0.0;
};

using ShapeFunction = std::function<double(const ShapeVector&, double u)>;

/// Schur condition via central differences with h_i = max(step, step |x_i|).
/// A pair term counts as zero when within tol * max(1, |f(x)|).
SchurCheck schur_differential_check(const ShapeFunction& f, const ShapeVector& x, double u, double step = 1e-6,
                                    double tol = 1e-6);

}  // namespace kwg
