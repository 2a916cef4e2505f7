#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "kwg/grid.hpp"
#include "kwg/kwg_core.hpp"
#include "kwg/order_stats.hpp"
#include "kwg/ordering.hpp"

namespace kwg {

/// Seed of substream `index` of a run seeded with `seed`:
/// splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15)).
std::uint64_t derive_substream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform draws on the open interval (0, 1) from mt19937_64, converted by hand
/// (top 53 bits, offset by half an ulp) so the stream is identical on every platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

 private:
  std::mt19937_64 engine_;
};

struct SampleBatch {
  std::vector<double> draws;
  std::uint64_t seed = 0;

  std::size_t size() const { return draws.size(); }
};

/// Inverse-transform draws through kwg_quantile, using substream 0 of `seed`.
SampleBatch sample_kwg(const KwGShape& shape, const ParentDistribution& parent, std::size_t size,
                       std::uint64_t seed);

/// Minimum of one draw per component; component i reads substream i, so a
/// one-component series reproduces sample_kwg exactly.
SampleBatch sample_min(const HeterogeneousSeries& series, std::size_t size, std::uint64_t seed);

/// sup_x |F_n(x) - cdf(x)| for the empirical cdf of the batch.
double kolmogorov_distance(const SampleBatch& batch, const std::function<double(double)>& cdf);

/// Fraction of draws strictly greater than x; `sorted` must be ascending.
double empirical_sf(const std::vector<double>& sorted, double x);

/// DKW half-width at confidence 1 - alpha for n draws.
double dkw_band(std::size_t n, double alpha = 1e-3);

struct EmpiricalAgreement {
  OrderingVerdict analytic_st;
  OrderingVerdict analytic_relation;  ///< same as analytic_st when relation is st
  double band = 0.0;                  ///< allowed |empirical - analytic| for sf_U - sf_V
  double max_deviation = 0.0;         ///< max |(emp_U - emp_V) - (sf_U - sf_V)| over the grid
  bool empirical_leq = false;         ///< emp_U <= emp_V + band everywhere
  bool empirical_geq = false;         ///< emp_U >= emp_V - band everywhere
  std::vector<double> witnesses;      ///< grid x where the empirical curves cross beyond the band
  double ks_u = 0.0;
  double ks_v = 0.0;
  bool agrees = false;
};

/// Empirical check of the survival curves of both minima against the analytic
/// verdicts. hr and lr are only checked through the st direction they imply.
EmpiricalAgreement empirical_order_check(Relation relation, const HeterogeneousSeries& u,
                                         const HeterogeneousSeries& v, std::size_t size, std::uint64_t seed,
                                         const Grid& grid, const CheckOptions& opts = {});

}  // namespace kwg
