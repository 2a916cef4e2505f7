#include "kwg/majorization.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "kwg/errors.hpp"

namespace kwg {

ShapeVector::ShapeVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("shape vector must not be empty");
  for (double v : entries_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParameterDomainError(fmt::format("shape vector entries must be positive, got {}", v));
    }
  }
}

MajorizationResult::MajorizationResult(bool majorizes, bool weak_super, bool weak_sub,
                                       std::vector<double> slack)
    : majorizes_(majorizes),
      weak_super_(weak_super || majorizes),
      weak_sub_(weak_sub || majorizes),
      slack_(std::move(slack)) {}

MajorizationResult compare(const ShapeVector& x, const ShapeVector& y) {
  const std::size_t n = x.size();
  if (y.size() != n) {
    throw DimensionError(fmt::format("cannot compare vectors of length {} and {}", n, y.size()));
  }
  std::vector<double> xs(x.entries().begin(), x.entries().end());
  std::vector<double> ys(y.entries().begin(), y.entries().end());
  std::stable_sort(xs.begin(), xs.end());
  std::stable_sort(ys.begin(), ys.end());

  std::vector<double> slack(n);
  double px = 0.0;
  double py = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    px += xs[j];
    py += ys[j];
    slack[j] = py - px;
  }
  const double total_x = px;
  const double total_y = py;
  const double tol = 1e-12 * static_cast<double>(n) * std::max(total_x, total_y);

  const bool weak_super = std::all_of(slack.begin(), slack.end(), [tol](double s) { return s >= -tol; });

  // Suffix sums: sum_{i>=j} x_(i) - sum_{i>=j} y_(i) = (total_x - total_y) + slack[j-1].
  bool weak_sub = total_x - total_y >= -tol;
  for (std::size_t j = 1; j < n && weak_sub; ++j) {
    weak_sub = (total_x - total_y) + slack[j - 1] >= -tol;
  }

  const bool equal_totals = std::abs(total_x - total_y) <= tol;
  bool prefix_ok = true;
  for (std::size_t j = 0; j + 1 < n; ++j) prefix_ok = prefix_ok && slack[j] >= -tol;
  return MajorizationResult(equal_totals && prefix_ok, weak_super, weak_sub, std::move(slack));
}

bool in_D_plus(std::span<const double> x) {
  if (x.empty() || !(x.back() > 0.0)) return false;
  return std::is_sorted(x.begin(), x.end(), std::greater<>());
}

bool in_E_plus(std::span<const double> x) {
  if (x.empty() || !(x.front() > 0.0)) return false;
  return std::is_sorted(x.begin(), x.end());
}

}  // namespace kwg
