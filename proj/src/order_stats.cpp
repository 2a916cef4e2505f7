#include "kwg/order_stats.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/stable_math.hpp"

namespace kwg {

HeterogeneousSeries::HeterogeneousSeries(ParentDistribution parent, std::vector<double> alphas,
                                         std::vector<double> betas)
    : parent_(std::move(parent)), alphas_(std::move(alphas)), betas_(std::move(betas)) {
  if (alphas_.empty()) throw DimensionError("a series needs at least one component");
  if (alphas_.size() != betas_.size()) {
    throw DimensionError(
        fmt::format("alphas has {} entries but betas has {}", alphas_.size(), betas_.size()));
  }
  for (std::size_t i = 0; i < alphas_.size(); ++i) KwGShape(alphas_[i], betas_[i]);
}

MultipleOutlierSeries::MultipleOutlierSeries(ParentDistribution parent, KwGShape base, std::size_t n1,
                                             KwGShape outlier, std::size_t n2)
    : parent_(std::move(parent)), base_(base), n1_(n1), outlier_(outlier), n2_(n2) {
  if (n1 == 0 || n2 == 0) throw DimensionError("multiple-outlier blocks need n1 >= 1 and n2 >= 1");
}

HeterogeneousSeries MultipleOutlierSeries::expand() const {
  std::vector<double> alphas(n1_, base_.alpha());
  std::vector<double> betas(n1_, base_.beta());
  alphas.insert(alphas.end(), n2_, outlier_.alpha());
  betas.insert(betas.end(), n2_, outlier_.beta());
  return HeterogeneousSeries(parent_, std::move(alphas), std::move(betas));
}

namespace {

struct ParentLogs {
  double log_cdf;
  double log_sf;
  double log_pdf;
};

ParentLogs parent_logs(const ParentDistribution& parent, double x) {
  return {parent.log_cdf(x), parent.log_sf(x), parent.log_pdf(x)};
}

// Component terms beta_i log(1 - F^alpha_i) and log hazard_i, filled into the two buffers.
void component_terms(const HeterogeneousSeries& series, const ParentLogs& p, std::vector<double>& log_sf_terms,
                     std::vector<double>* log_hazard_terms) {
  const auto alphas = series.alphas();
  const auto betas = series.betas();
  log_sf_terms.resize(alphas.size());
  if (log_hazard_terms) log_hazard_terms->resize(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double base = log1m_pow(p.log_cdf, p.log_sf, alphas[i]);
    log_sf_terms[i] = scaled_log(betas[i], base);
    if (log_hazard_terms) {
      (*log_hazard_terms)[i] = std::log(alphas[i]) + std::log(betas[i]) +
                               scaled_log(alphas[i] - 1.0, p.log_cdf) + p.log_pdf - base;
    }
  }
}

}  // namespace

MinimumLogs min_logs(const HeterogeneousSeries& series, double x) {
  std::vector<double> sf_terms;
  std::vector<double> hazard_terms;
  component_terms(series, parent_logs(series.parent(), x), sf_terms, &hazard_terms);
  const MinimumLogs out{pairwise_sum(sf_terms), log_sum_exp(hazard_terms)};
  if (std::isnan(out.log_hazard) || out.log_hazard == std::numeric_limits<double>::infinity()) {
    throw OverflowDomainError(fmt::format("hazard of the minimum undefined at x={}", x), x);
  }
  return out;
}

double min_log_sf(const HeterogeneousSeries& series, double x) {
  std::vector<double> sf_terms;
  component_terms(series, parent_logs(series.parent(), x), sf_terms, nullptr);
  return pairwise_sum(sf_terms);
}

double min_sf(const HeterogeneousSeries& series, double x) { return std::exp(min_log_sf(series, x)); }

double min_log_hazard(const HeterogeneousSeries& series, double x) { return min_logs(series, x).log_hazard; }

double min_hazard(const HeterogeneousSeries& series, double x) {
  std::vector<double> sf_terms;
  std::vector<double> hazard_terms;
  component_terms(series, parent_logs(series.parent(), x), sf_terms, &hazard_terms);
  const double floor = std::log(kSurvivalFloor);
  for (double term : sf_terms) {
    if (term < floor) {
      throw OverflowDomainError(fmt::format("component survival underflows at x={}", x), x);
    }
  }
  return std::exp(log_sum_exp(hazard_terms));
}

double min_log_pdf(const HeterogeneousSeries& series, double x) { return min_logs(series, x).log_pdf(); }

double min_pdf(const HeterogeneousSeries& series, double x) {
  return min_hazard(series, x) * min_sf(series, x);
}

double log_sf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x) {
  const double lu = min_log_sf(u, x);
  const double lv = min_log_sf(v, x);
  if (!std::isfinite(lu) || !std::isfinite(lv)) {
    throw OverflowDomainError(fmt::format("survival of a minimum vanishes at x={}", x), x);
  }
  return lv - lu;
}

double sf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x) {
  return std::exp(log_sf_ratio(u, v, x));
}

double log_pdf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x) {
  const double lu = min_log_pdf(u, x);
  const double lv = min_log_pdf(v, x);
  if (!std::isfinite(lu) || !std::isfinite(lv)) {
    throw OverflowDomainError(fmt::format("density of a minimum vanishes at x={}", x), x);
  }
  return lu - lv;
}

double pdf_ratio(const HeterogeneousSeries& u, const HeterogeneousSeries& v, double x) {
  return std::exp(log_pdf_ratio(u, v, x));
}

}  // namespace kwg
