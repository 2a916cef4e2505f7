#include "kwg/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/stable_math.hpp"

namespace kwg {

namespace {

void require_domain(double s, double u) {
  if (!(s > 0.0) || !std::isfinite(s)) throw ParameterDomainError(fmt::format("s must be positive, got {}", s));
  if (!(u > 0.0 && u < 1.0)) throw ParameterDomainError(fmt::format("u must lie in (0, 1), got {}", u));
}

// 1 - e^a + a e^a for a < 0. Series sum_{k>=2} (k-1) a^k / k! near zero.
double tilt(double a) {
  if (std::abs(a) < 0.1) {
    double term = a;  // a^k / k!
    double sum = 0.0;
    for (int k = 2; k <= 14; ++k) {
      term *= a / k;
      sum += (k - 1) * term;
    }
    return sum;
  }
  return -std::expm1(a) + a * std::exp(a);
}

// s log u and 1 - u^s
struct PowerTerms {
  double a;          // s log u
  double one_minus;  // 1 - u^s
};

PowerTerms power_terms(double s, double u) {
  const double a = s * std::log(u);
  return {a, -std::expm1(a)};
}

}  // namespace

double phi(double s, double t, double u) {
  require_domain(s, u);
  if (!(t > 0.0)) throw ParameterDomainError(fmt::format("t must be positive, got {}", t));
  const auto p = power_terms(s, u);
  return s * t * std::exp(p.a) / p.one_minus;
}

double phi1(double s, double u) {
  require_domain(s, u);
  const auto p = power_terms(s, u);
  if (std::abs(p.a) < 0.05) {
    // 1 - a/(e^a - 1) = a/2 - a^2/12 + a^4/720 - a^6/30240 + a^8/1209600
    const double a = p.a;
    const double a2 = a * a;
    return a / 2.0 - a2 / 12.0 + a2 * a2 / 720.0 - a2 * a2 * a2 / 30240.0 + a2 * a2 * a2 * a2 / 1209600.0;
  }
  return 1.0 + p.a / p.one_minus;
}

double phi2(double s, double u) {
  require_domain(s, u);
  return s / power_terms(s, u).one_minus;
}

double phi2_ds(double s, double u) {
  require_domain(s, u);
  const auto p = power_terms(s, u);
  return tilt(p.a) / (p.one_minus * p.one_minus);
}

double phi3(double s, double u) {
  require_domain(s, u);
  const auto p = power_terms(s, u);
  return s * std::exp(p.a) * tilt(p.a) / (p.one_minus * p.one_minus * p.one_minus);
}

double hazard_factor(double s, double u) {
  require_domain(s, u);
  const auto p = power_terms(s, u);
  return s * std::exp((s - 1.0) * std::log(u)) / p.one_minus;
}

double psi(const ShapeVector& alphas, const ShapeVector& betas, double u) {
  if (alphas.size() != betas.size()) {
    throw DimensionError(fmt::format("psi got {} alphas and {} betas", alphas.size(), betas.size()));
  }
  const std::size_t n = alphas.size();
  std::vector<double> log_weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    require_domain(alphas[k], u);
    const auto p = power_terms(alphas[k], u);
    // log phi(alpha_k, beta_k, u), kept in log space so that tiny u^alpha does not zero the weights
    log_weights[k] = std::log(alphas[k]) + std::log(betas[k]) + p.a - std::log(p.one_minus);
  }
  const double norm = log_sum_exp(log_weights);
  std::vector<double> terms(n);
  for (std::size_t k = 0; k < n; ++k) terms[k] = std::exp(log_weights[k] - norm) * phi2(alphas[k], u);
  return pairwise_sum(terms);
}

bool LemmaSuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

const LemmaCheck* LemmaSuiteReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

LemmaCheck check_direction_in_s(std::string name, const std::function<double(double, double)>& f,
                                Direction expected, std::span<const double> s_grid,
                                std::span<const double> u_grid, double slope_tol) {
  if (expected != Direction::increasing && expected != Direction::decreasing) {
    throw ParameterDomainError("expected direction must be increasing or decreasing");
  }
  const double sign = expected == Direction::increasing ? 1.0 : -1.0;
  LemmaCheck out;
  out.name = std::move(name);
  for (double u : u_grid) {
    double prev = s_grid.empty() ? 0.0 : f(s_grid[0], u);
    for (std::size_t k = 1; k < s_grid.size(); ++k) {
      const double cur = f(s_grid[k], u);
      const double against = -sign * (cur - prev);
      const double threshold = slope_tol * std::max({1.0, std::abs(prev), std::abs(cur)});
      if (against > threshold) {
        out.passed = false;
        if (against > out.worst_violation) {
          out.worst_violation = against;
          out.witness_s = s_grid[k - 1];
          out.witness_u = u;
        }
      }
      prev = cur;
    }
  }
  return out;
}

namespace {

LemmaCheck check_nonpositive(std::string name, const std::function<double(double, double)>& f,
                             std::span<const double> s_grid, std::span<const double> u_grid, double tol) {
  LemmaCheck out;
  out.name = std::move(name);
  for (double u : u_grid) {
    for (double s : s_grid) {
      const double v = f(s, u);
      if (v > tol && v > out.worst_violation) {
        out.passed = false;
        out.worst_violation = v;
        out.witness_s = s;
        out.witness_u = u;
      }
    }
  }
  return out;
}

// Divided-difference slopes must not decrease (beyond a relative tolerance).
LemmaCheck check_convex_in_s(std::string name, const std::function<double(double, double)>& f,
                             std::span<const double> s_grid, std::span<const double> u_grid, double rel_tol) {
  LemmaCheck out;
  out.name = std::move(name);
  constexpr double kNegligibleSlope = 1e-290;
  for (double u : u_grid) {
    std::vector<double> values(s_grid.size());
    for (std::size_t k = 0; k < s_grid.size(); ++k) values[k] = f(s_grid[k], u);
    for (std::size_t k = 0; k + 2 < s_grid.size(); ++k) {
      const double m0 = (values[k + 1] - values[k]) / (s_grid[k + 1] - s_grid[k]);
      const double m1 = (values[k + 2] - values[k + 1]) / (s_grid[k + 2] - s_grid[k + 1]);
      const double scale = std::max(std::abs(m0), std::abs(m1));
      if (scale < kNegligibleSlope) continue;
      const double drop = m0 - m1;
      if (drop > rel_tol * scale) {
        out.passed = false;
        if (drop / scale > out.worst_violation) {
          out.worst_violation = drop / scale;
          out.witness_s = s_grid[k + 1];
          out.witness_u = u;
        }
      }
    }
  }
  return out;
}

}  // namespace

LemmaSuiteReport lemma_monotonicity_suite(std::span<const double> s_grid, std::span<const double> u_grid,
                                          double slope_tol) {
  LemmaSuiteReport report;
  auto& checks = report.checks;
  checks.push_back(check_direction_in_s(
      "phi_decreasing_in_s", [](double s, double u) { return phi(s, 1.0, u); }, Direction::decreasing, s_grid,
      u_grid, slope_tol));
  checks.push_back(check_direction_in_s(
      "phi1_decreasing_in_s", [](double s, double u) { return phi1(s, u); }, Direction::decreasing, s_grid,
      u_grid, slope_tol));
  checks.push_back(check_nonpositive(
      "phi1_nonpositive", [](double s, double u) { return phi1(s, u); }, s_grid, u_grid, slope_tol));
  checks.push_back(check_direction_in_s(
      "phi2_increasing_in_s", [](double s, double u) { return phi2(s, u); }, Direction::increasing, s_grid,
      u_grid, slope_tol));
  checks.push_back(check_direction_in_s(
      "phi_times_dphi2_decreasing_in_s", [](double s, double u) { return phi(s, 1.0, u) * phi2_ds(s, u); },
      Direction::decreasing, s_grid, u_grid, slope_tol));
  checks.push_back(check_direction_in_s(
      "phi3_decreasing_in_s", [](double s, double u) { return phi3(s, u); }, Direction::decreasing, s_grid,
      u_grid, slope_tol));
  checks.push_back(check_direction_in_s(
      "hazard_factor_decreasing_in_s", [](double s, double u) { return hazard_factor(s, u); },
      Direction::decreasing, s_grid, u_grid, slope_tol));
  checks.push_back(check_convex_in_s(
      "hazard_factor_convex_in_s", [](double s, double u) { return hazard_factor(s, u); }, s_grid, u_grid, 1e-6));

  if (!u_grid.empty() && s_grid.size() > 1) {
    const double u = u_grid[u_grid.size() / 2];
    std::vector<double> dphi(s_grid.size());
    for (std::size_t k = 0; k < s_grid.size(); ++k) {
      dphi[k] = phi(s_grid[k], 1.0, u) * phi1(s_grid[k], u) / s_grid[k];
    }
    report.dphi_ds_direction = monotonicity_scan(s_grid, dphi, slope_tol).direction;
  }
  return report;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi >= lo)) throw ParameterDomainError("log_spaced needs 0 < lo <= hi");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  return out;
}

std::vector<double> interior_unit_grid(std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = static_cast<double>(k + 1) / static_cast<double>(count + 1);
  return out;
}

std::string_view to_string(SchurEvidence e) {
  switch (e) {
    case SchurEvidence::schur_convex: return "schur_convex_evidence";
    case SchurEvidence::schur_concave: return "schur_concave_evidence";
    case SchurEvidence::both: return "both";
    case SchurEvidence::neither: return "neither";
  }
  return "?";
}

SchurCheck schur_differential_check(const ShapeFunction& f, const ShapeVector& x, double u, double step,
                                    double tol) {
  if (!(step > 0.0)) throw ParameterDomainError(fmt::format("step must be positive, got {}", step));
  if (!(u > 0.0 && u < 1.0)) throw ParameterDomainError(fmt::format("u must lie in (0, 1), got {}", u));
  const std::size_t n = x.size();
  const std::vector<double> base(x.entries().begin(), x.entries().end());

  std::vector<double> grad(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = std::min(std::max(step, step * std::abs(base[i])), base[i] / 2.0);
    auto plus = base;
    auto minus = base;
    plus[i] += h;
    minus[i] -= h;
    grad[i] = (f(ShapeVector(plus), u) - f(ShapeVector(minus), u)) / (2.0 * h);
  }

  SchurCheck out;
  out.threshold = tol * std::max(1.0, std::abs(f(x, u)));
  bool convex = true;
  bool concave = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double term = (base[i] - base[j]) * (grad[i] - grad[j]);
      out.pair_terms.push_back(term);
      convex = convex && term >= -out.threshold;
      concave = concave && term <= out.threshold;
    }
  }
  out.evidence = convex && concave ? SchurEvidence::both
                 : convex          ? SchurEvidence::schur_convex
                 : concave         ? SchurEvidence::schur_concave
                                   : SchurEvidence::neither;
  return out;
}

}  // namespace kwg
