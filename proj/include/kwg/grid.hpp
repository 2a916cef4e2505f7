#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwg/parent_dist.hpp"

namespace kwg {

/// How grid parameters t map to evaluation points x.
enum class GridKind {
  direct,            ///< x = t
  quantile,          ///< x = F^{-1}(t), t = u in (0, 1)
  log_substitution,  ///< x = -ln t, t = y in (0, 1)
};

std::string_view to_string(GridKind kind);  // "x", "u", "y"
GridKind parse_grid_kind(std::string_view text);

struct GridSpec {
  GridKind kind = GridKind::quantile;
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  std::size_t points = 2001;
};

inline constexpr std::size_t kMinGridPoints = 16;

/// Strictly increasing evaluation points together with the parameter values
/// that generated them. Parameters are linearly spaced in t; for the
/// log-substitution kind they are stored in decreasing y so that x increases.
class Grid {
 public:
  static Grid direct(double lo, double hi, std::size_t points);
  static Grid through_quantile(const ParentDistribution& parent, double lo, double hi, std::size_t points);
  static Grid log_substitution(double lo, double hi, std::size_t points);
  /// `parent` is only consulted for the quantile kind.
  static Grid make(const GridSpec& spec, const ParentDistribution& parent);

  std::span<const double> points() const { return points_; }
  std::span<const double> params() const { return params_; }
  std::size_t size() const { return points_.size(); }
  const GridSpec& spec() const { return spec_; }
  std::string description() const;

  /// Same bounds with 2n - 1 points; the old points are a subset of the new ones.
  Grid refined() const;

  /// Throws ParameterDomainError if any point falls outside the parent's open support.
  void require_inside(const ParentDistribution& parent) const;

 private:
  Grid(GridSpec spec, std::optional<ParentDistribution> parent);

  GridSpec spec_;
  std::optional<ParentDistribution> parent_;
  std::vector<double> params_;
  std::vector<double> points_;
};

}  // namespace kwg
