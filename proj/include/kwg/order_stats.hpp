#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kwg/kwg_core.hpp"
#include "kwg/parent_dist.hpp"

namespace kwg {

/// n independent Kw-G(alpha_i, beta_i, F) lifetimes sharing one parent F.
/// The object of study is their minimum.
class HeterogeneousSeries {
 public:
  /// Throws DimensionError on length mismatch or n = 0, ParameterDomainError on
  /// a nonpositive entry.
  HeterogeneousSeries(ParentDistribution parent, std::vector<double> alphas, std::vector<double> betas);

  const ParentDistribution& parent() const { return parent_; }
  std::span<const double> alphas() const { return alphas_; }
  std::span<const double> betas() const { return betas_; }
  std::size_t size() const { return alphas_.size(); }
  KwGShape component(std::size_t i) const { return KwGShape(alphas_.at(i), betas_.at(i)); }

 private:
  ParentDistribution parent_;
  std::vector<double> alphas_;
  std::vector<double> betas_;
};

/// Two-block series: `base` repeated n1 times followed by `outlier` repeated n2 times.
class MultipleOutlierSeries {
 public:
  MultipleOutlierSeries(ParentDistribution parent, KwGShape base, std::size_t n1, KwGShape outlier,
                        std::size_t n2);

  const ParentDistribution& parent() const { return parent_; }
  const KwGShape& base() const { return base_; }
  const KwGShape& outlier() const { return outlier_; }
  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }

  HeterogeneousSeries expand() const;

 private:
  ParentDistribution parent_;
  KwGShape base_;
  std::size_t n1_;
  KwGShape outlier_;
  std::size_t n2_;
};

/// Log survival and log hazard of the minimum at one point, sharing the parent evaluation.
struct MinimumLogs {
  double log_sf;
  double log_hazard;

  double log_pdf() const { return log_hazard + log_sf; }
};

MinimumLogs min_logs(const HeterogeneousSeries& series, double x);

double min_log_sf(const HeterogeneousSeries& series, double x);
double min_sf(const HeterogeneousSeries& series, double x);

/// Sum of component hazards. Throws OverflowDomainError if any component
/// survival falls below kSurvivalFloor.
double min_hazard(const HeterogeneousSeries& series, double x);
double min_log_hazard(const HeterogeneousSeries& series, double x);

/// hazard * survival of the minimum.
double min_pdf(const HeterogeneousSeries& series, double x);
double min_log_pdf(const HeterogeneousSeries& series, double x);

/// log( min_sf(v, x) / min_sf(u, x) ). Throws OverflowDomainError when either
/// log survival is -inf.
double log_sf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x);
double sf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x);

/// log( min_pdf(u, x) / min_pdf(v, x) ).
double log_pdf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x);
double pdf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x);

}  // namespace kwg
