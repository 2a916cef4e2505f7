#include "kwg/stable_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace kwg {

double log1mexp(double a) {
  if (a >= 0.0) return -std::numeric_limits<double>::infinity();
  if (a > -std::numbers::ln2) return std::log(-std::expm1(a));
  return std::log1p(-std::exp(a));
}

double log1m_pow(double log_cdf, double log_sf, double s) {
  if (log_sf < -700.0) return std::log(s) + log_sf;
  return log1mexp(s * log_cdf);
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double log_sum_exp(std::span<const double> log_values) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (log_values.empty()) return kNegInf;
  const double peak = *std::max_element(log_values.begin(), log_values.end());
  if (peak == kNegInf) return kNegInf;
  if (!std::isfinite(peak)) return peak;
  std::vector<double> scaled(log_values.size());
  std::transform(log_values.begin(), log_values.end(), scaled.begin(),
                 [peak](double v) { return std::exp(v - peak); });
  return peak + std::log(pairwise_sum(scaled));
}

}  // namespace kwg
