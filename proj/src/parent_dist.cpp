#include "kwg/parent_dist.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/stable_math.hpp"

namespace kwg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class UniformModel final : public ParentModel {
 public:
  std::string name() const override { return "uniform01"; }
  Support support() const override { return {0.0, 1.0}; }
  double log_cdf(double x) const override { return std::log(x); }
  double log_sf(double x) const override { return std::log1p(-x); }
  double log_pdf(double) const override { return 0.0; }
  double quantile(double p) const override { return p; }
  double cdf(double x) const override { return x; }
  double sf(double x) const override { return 1.0 - x; }
  double pdf(double) const override { return 1.0; }
};

// Exponential is the shape-1 member; it keeps its own name for scenario round trips.
class WeibullModel final : public ParentModel {
 public:
  WeibullModel(double shape, double rate_coeff, bool exponential)
      : shape_(shape), rate_(rate_coeff), exponential_(exponential),
        log_norm_(std::log(shape * rate_coeff)) {}

  std::string name() const override {
    if (exponential_) return fmt::format("exponential({})", rate_);
    return fmt::format("weibull({}, {})", shape_, rate_);
  }
  Support support() const override { return {0.0, kInf}; }

  double log_cdf(double x) const override { return log1mexp(-cumulative_hazard(x)); }
  double log_sf(double x) const override { return -cumulative_hazard(x); }
  double log_pdf(double x) const override {
    return log_norm_ + scaled_log(shape_ - 1.0, std::log(x)) - cumulative_hazard(x);
  }
  double quantile(double p) const override {
    const double t = -std::log1p(-p) / rate_;
    return exponential_ ? t : std::pow(t, 1.0 / shape_);
  }
  double cdf(double x) const override { return -std::expm1(-cumulative_hazard(x)); }
  double sf(double x) const override { return std::exp(-cumulative_hazard(x)); }

 private:
  double cumulative_hazard(double x) const {
    return exponential_ ? rate_ * x : rate_ * std::pow(x, shape_);
  }

  double shape_;
  double rate_;
  bool exponential_;
  double log_norm_;
};

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterDomainError(fmt::format("{} must be a positive finite number, got {}", what, value));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, std::string_view whole) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParameterDomainError(fmt::format("bad number '{}' in parent '{}'", token, whole));
  }
  return value;
}

}  // namespace

double ParentModel::cdf(double x) const { return std::exp(log_cdf(x)); }
double ParentModel::sf(double x) const { return std::exp(log_sf(x)); }
double ParentModel::pdf(double x) const { return std::exp(log_pdf(x)); }

ParentDistribution::ParentDistribution(std::shared_ptr<const ParentModel> model)
    : model_(std::move(model)) {
  if (!model_) throw ParameterDomainError("parent model must not be null");
}

double ParentDistribution::cdf(double x) const {
  const Support s = support();
  if (x <= s.lo) return 0.0;
  if (x >= s.hi) return 1.0;
  return model_->cdf(x);
}

double ParentDistribution::sf(double x) const {
  const Support s = support();
  if (x <= s.lo) return 1.0;
  if (x >= s.hi) return 0.0;
  return model_->sf(x);
}

double ParentDistribution::pdf(double x) const {
  const Support s = support();
  if (x < s.lo || x > s.hi) return 0.0;
  return model_->pdf(x);
}

double ParentDistribution::log_cdf(double x) const {
  const Support s = support();
  if (x <= s.lo) return -kInf;
  if (x >= s.hi) return 0.0;
  return model_->log_cdf(x);
}

double ParentDistribution::log_sf(double x) const {
  const Support s = support();
  if (x <= s.lo) return 0.0;
  if (x >= s.hi) return -kInf;
  return model_->log_sf(x);
}

double ParentDistribution::log_pdf(double x) const {
  const Support s = support();
  if (x < s.lo || x > s.hi) return -kInf;
  return model_->log_pdf(x);
}

double ParentDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterDomainError(fmt::format("quantile probability must lie in [0, 1], got {}", p));
  }
  const Support s = support();
  if (p == 0.0) return s.lo;
  if (p == 1.0) return s.hi;
  return model_->quantile(p);
}

ParentDistribution make_uniform01() {
  return ParentDistribution(std::make_shared<UniformModel>());
}

ParentDistribution make_exponential(double rate) {
  require_positive(rate, "exponential rate");
  return ParentDistribution(std::make_shared<WeibullModel>(1.0, rate, true));
}

ParentDistribution make_weibull(double shape, double rate_coeff) {
  require_positive(shape, "weibull shape");
  require_positive(rate_coeff, "weibull rate coefficient");
  return ParentDistribution(std::make_shared<WeibullModel>(shape, rate_coeff, false));
}

ParentDistribution parse_parent(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto open = whole.find('(');
  const std::string_view head = trim(whole.substr(0, open));
  std::vector<double> args;
  if (open != std::string_view::npos) {
    if (whole.back() != ')') throw ParameterDomainError(fmt::format("unterminated parent '{}'", whole));
    std::string_view inner = whole.substr(open + 1, whole.size() - open - 2);
    while (!inner.empty()) {
      const auto comma = inner.find(',');
      args.push_back(parse_number(inner.substr(0, comma), whole));
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  if (head == "uniform01" && args.empty()) return make_uniform01();
  if (head == "exponential" && args.size() == 1) return make_exponential(args[0]);
  if (head == "weibull" && args.size() == 2) return make_weibull(args[0], args[1]);
  throw ParameterDomainError(fmt::format("unknown parent '{}'", whole));
}

}  // namespace kwg
