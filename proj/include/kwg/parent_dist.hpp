#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace kwg {

/// Open support interval (lo, hi); either end may be infinite.
struct Support {
  double lo;
  double hi;

  bool contains(double x) const { return x > lo && x < hi; }
};

/// Plugin interface for a parent law F.
///
/// Implementations only see points strictly inside the support; boundary and
/// out-of-range handling lives in ParentDistribution. Log forms must stay
/// accurate where the plain forms round to 0 or 1.
class ParentModel {
 public:
  virtual ~ParentModel() = default;

  virtual std::string name() const = 0;
  virtual Support support() const = 0;
  virtual double log_cdf(double x) const = 0;
  virtual double log_sf(double x) const = 0;
  virtual double log_pdf(double x) const = 0;
  /// p strictly inside (0, 1).
  virtual double quantile(double p) const = 0;

  virtual double cdf(double x) const;
  virtual double sf(double x) const;
  virtual double pdf(double x) const;
};

/// Immutable handle to a parent model. Cheap to copy and safe to share across threads.
class ParentDistribution {
 public:
  explicit ParentDistribution(std::shared_ptr<const ParentModel> model);

  std::string name() const { return model_->name(); }
  Support support() const { return model_->support(); }

  double cdf(double x) const;
  double sf(double x) const;
  double pdf(double x) const;
  double log_cdf(double x) const;
  double log_sf(double x) const;
  double log_pdf(double x) const;
  /// p in [0, 1]; the endpoints map to the support bounds.
  double quantile(double p) const;

  const ParentModel& model() const { return *model_; }

 private:
  std::shared_ptr<const ParentModel> model_;
};

/// F(x) = x on (0, 1).
ParentDistribution make_uniform01();

/// F(x) = 1 - exp(-rate x) on (0, inf).
ParentDistribution make_exponential(double rate);

/// F(x) = 1 - exp(-rate_coeff x^shape) on (0, inf).
ParentDistribution make_weibull(double shape, double rate_coeff);

/// Parses `uniform01`, `exponential(rate)` or `weibull(shape, rate_coeff)`.
/// Throws ParameterDomainError on anything else.
ParentDistribution parse_parent(std::string_view text);

}  // namespace kwg
