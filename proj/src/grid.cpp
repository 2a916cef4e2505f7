#include "kwg/grid.hpp"

#include <cmath>

#include <fmt/format.h>

#include "kwg/errors.hpp"

namespace kwg {

std::string_view to_string(GridKind kind) {
  switch (kind) {
    case GridKind::direct: return "x";
    case GridKind::quantile: return "u";
    case GridKind::log_substitution: return "y";
  }
  return "?";
}

GridKind parse_grid_kind(std::string_view text) {
  if (text == "x") return GridKind::direct;
  if (text == "u") return GridKind::quantile;
  if (text == "y") return GridKind::log_substitution;
  throw ParameterDomainError(fmt::format("unknown grid kind '{}' (expected x, u or y)", text));
}

Grid::Grid(GridSpec spec, std::optional<ParentDistribution> parent)
    : spec_(spec), parent_(std::move(parent)) {
  if (spec_.points < kMinGridPoints) {
    throw ParameterDomainError(fmt::format("grid needs at least {} points, got {}", kMinGridPoints, spec_.points));
  }
  if (!(spec_.lo < spec_.hi) || !std::isfinite(spec_.lo) || !std::isfinite(spec_.hi)) {
    throw ParameterDomainError(fmt::format("grid bounds must satisfy lo < hi, got [{}, {}]", spec_.lo, spec_.hi));
  }
  if (spec_.kind != GridKind::direct && !(spec_.lo > 0.0 && spec_.hi < 1.0)) {
    throw ParameterDomainError(
        fmt::format("{}-grid bounds must lie inside (0, 1), got [{}, {}]", to_string(spec_.kind), spec_.lo, spec_.hi));
  }

  const std::size_t n = spec_.points;
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(n - 1);
    t[k] = k + 1 == n ? spec_.hi : spec_.lo + (spec_.hi - spec_.lo) * frac;
  }

  params_.resize(n);
  points_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    switch (spec_.kind) {
      case GridKind::direct:
        params_[k] = t[k];
        points_[k] = t[k];
        break;
      case GridKind::quantile:
        params_[k] = t[k];
        points_[k] = parent_->quantile(t[k]);
        break;
      case GridKind::log_substitution:
        params_[k] = t[n - 1 - k];
        points_[k] = -std::log(params_[k]);
        break;
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!(points_[k] > points_[k - 1])) {
      throw ParameterDomainError(
          fmt::format("grid points are not strictly increasing near x={} ({})", points_[k], description()));
    }
  }
}

Grid Grid::direct(double lo, double hi, std::size_t points) {
  return Grid({GridKind::direct, lo, hi, points}, std::nullopt);
}

Grid Grid::through_quantile(const ParentDistribution& parent, double lo, double hi, std::size_t points) {
  return Grid({GridKind::quantile, lo, hi, points}, parent);
}

Grid Grid::log_substitution(double lo, double hi, std::size_t points) {
  return Grid({GridKind::log_substitution, lo, hi, points}, std::nullopt);
}

Grid Grid::make(const GridSpec& spec, const ParentDistribution& parent) {
  if (spec.kind == GridKind::quantile) return Grid(spec, parent);
  return Grid(spec, std::nullopt);
}

std::string Grid::description() const {
  std::string out = fmt::format("{}[{},{}]x{}", to_string(spec_.kind), spec_.lo, spec_.hi, spec_.points);
  if (parent_) out += " via " + parent_->name();
  return out;
}

Grid Grid::refined() const {
  GridSpec finer = spec_;
  finer.points = 2 * spec_.points - 1;
  return Grid(finer, parent_);
}

void Grid::require_inside(const ParentDistribution& parent) const {
  const Support s = parent.support();
  if (!s.contains(points_.front()) || !s.contains(points_.back())) {
    throw ParameterDomainError(fmt::format("grid {} leaves the support ({}, {}) of {}", description(), s.lo,
                                           s.hi, parent.name()));
  }
}

}  // namespace kwg
