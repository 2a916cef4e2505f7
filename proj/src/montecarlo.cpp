#include "kwg/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "kwg/errors.hpp"

namespace kwg {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_size(std::size_t size) {
  if (size == 0) throw ParameterDomainError("sample size must be at least 1");
}

}  // namespace

std::uint64_t derive_substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

SampleBatch sample_kwg(const KwGShape& shape, const ParentDistribution& parent, std::size_t size,
                       std::uint64_t seed) {
  require_size(size);
  SampleBatch batch{std::vector<double>(size), seed};
  UniformStream stream(derive_substream_seed(seed, 0));
  for (auto& d : batch.draws) d = kwg_quantile(shape, parent, stream.next());
  return batch;
}

SampleBatch sample_min(const HeterogeneousSeries& series, std::size_t size, std::uint64_t seed) {
  require_size(size);
  SampleBatch batch{std::vector<double>(size, std::numeric_limits<double>::infinity()), seed};
  for (std::size_t i = 0; i < series.size(); ++i) {
    const KwGShape shape = series.component(i);
    UniformStream stream(derive_substream_seed(seed, i));
    for (auto& d : batch.draws) d = std::min(d, kwg_quantile(shape, series.parent(), stream.next()));
  }
  return batch;
}

double kolmogorov_distance(const SampleBatch& batch, const std::function<double(double)>& cdf) {
  std::vector<double> sorted = batch.draws;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    worst = std::max({worst, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return worst;
}

double empirical_sf(const std::vector<double>& sorted, double x) {
  const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(above) / static_cast<double>(sorted.size());
}

double dkw_band(std::size_t n, double alpha) {
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

EmpiricalAgreement empirical_order_check(Relation relation, const HeterogeneousSeries& u,
                                         const HeterogeneousSeries& v, std::size_t size, std::uint64_t seed,
                                         const Grid& grid, const CheckOptions& opts) {
  EmpiricalAgreement out;
  out.analytic_st = check_usual_stochastic(u, v, grid, opts);
  out.analytic_relation = relation == Relation::usual_stochastic ? out.analytic_st : check(relation, u, v, grid, opts);

  // Independent streams for the two samples.
  const auto batch_u = sample_min(u, size, derive_substream_seed(seed, 0x5500));
  const auto batch_v = sample_min(v, size, derive_substream_seed(seed, 0x5601));
  out.ks_u = kolmogorov_distance(batch_u, [&](double x) { return -std::expm1(min_log_sf(u, x)); });
  out.ks_v = kolmogorov_distance(batch_v, [&](double x) { return -std::expm1(min_log_sf(v, x)); });

  auto sorted_u = batch_u.draws;
  auto sorted_v = batch_v.draws;
  std::sort(sorted_u.begin(), sorted_u.end());
  std::sort(sorted_v.begin(), sorted_v.end());

  out.band = 2.0 * dkw_band(size);
  out.empirical_leq = true;
  out.empirical_geq = true;
  bool above = false;
  bool below = false;
  for (double x : grid.points()) {
    const double emp = empirical_sf(sorted_u, x) - empirical_sf(sorted_v, x);
    const double exact = min_sf(u, x) - min_sf(v, x);
    out.max_deviation = std::max(out.max_deviation, std::abs(emp - exact));
    if (emp > out.band) {
      out.empirical_leq = false;
      above = true;
    }
    if (emp < -out.band) {
      out.empirical_geq = false;
      below = true;
    }
    if ((emp > out.band || emp < -out.band) && out.witnesses.size() < 64) out.witnesses.push_back(x);
  }
  if (!(above && below)) out.witnesses.clear();

  bool direction_ok = true;
  for (const OrderingVerdict* verdict : {&out.analytic_st, &out.analytic_relation}) {
    if (verdict->result == Result::holds_leq) direction_ok = direction_ok && out.empirical_leq;
    if (verdict->result == Result::holds_geq) direction_ok = direction_ok && out.empirical_geq;
  }
  out.agrees = direction_ok && out.max_deviation <= out.band;
  return out;
}

}  // namespace kwg
