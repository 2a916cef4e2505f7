#include "kwg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "kwg/errors.hpp"
#include "kwg/lemmas.hpp"
#include "kwg/majorization.hpp"
#include "kwg/montecarlo.hpp"

namespace kwg {

namespace {

constexpr int kMaxRedraws = 1000;

using Vec = std::vector<double>;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

Vec log_uniform(std::mt19937_64& rng, double lo, double hi, std::size_t n) {
  Vec v(n);
  for (double& x : v) x = log_uniform(rng, lo, hi);
  return v;
}

Vec nonincreasing(Vec v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Vec nondecreasing(Vec v) {
  std::sort(v.begin(), v.end());
  return v;
}

Vec blocks(std::size_t n1, std::size_t n2, double a, double b) {
  Vec v(n1, a);
  v.insert(v.end(), n2, b);
  return v;
}

/// (x, y) with x majorizing y: y is drawn first, then n transfers move a share
/// of the smaller coordinate onto the larger one, which keeps the total.
std::pair<Vec, Vec> majorized_pair(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  Vec y = log_uniform(rng, lo, hi, n);
  Vec x = y;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t step = 0; step < n && n > 1; ++step) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (x[i] > x[j]) std::swap(i, j);
    const double t = uniform(rng, 0.0, 0.9) * x[i];
    x[i] -= t;
    x[j] += t;
  }
  return {x, y};
}

Vec shrink(std::mt19937_64& rng, Vec v) {
  for (double& x : v) x -= uniform(rng, 0.0, 0.5) * x;
  return v;
}

Vec grow(std::mt19937_64& rng, Vec v) {
  for (double& x : v) x += uniform(rng, 0.0, 0.5) * x;
  return v;
}

/// Weibull parents with a common shape, F2 having the smaller rate, so that
/// X1 <=st X2 and X1^s <=hr X2^s for every s.
std::pair<ParentDistribution, ParentDistribution> ordered_parents(std::mt19937_64& rng) {
  const double shape = log_uniform(rng, 0.5, 3.0);
  const double c1 = log_uniform(rng, 0.2, 5.0);
  const double c2 = c1 * uniform(rng, 0.1, 0.95);
  return {make_weibull(shape, c1), make_weibull(shape, c2)};
}

bool is_two_parent(TheoremCase c) { return c >= TheoremCase::t4_1; }

bool reversed_parents(TheoremCase c) { return c == TheoremCase::t4_2ii || c == TheoremCase::t4_4ii; }

Scenario make_scenario(TheoremCase c, const ParentDistribution& f1, const ParentDistribution& f2, Vec a, Vec b,
                       Vec g, Vec d) {
  const TheoremClaim claim = claim_of(c);
  Scenario s{std::string(to_string(c)),
             HeterogeneousSeries(f1, std::move(a), std::move(b)),
             HeterogeneousSeries(f2, std::move(g), std::move(d)),
             {claim.relation},
             {},
             0,
             "",
             {{claim.relation, claim.expected}}};
  return s;
}

Scenario draw(TheoremCase c, std::size_t n, std::mt19937_64& rng, const GeneratorOptions& opts) {
  ParentDistribution f1 = make_uniform01();
  ParentDistribution f2 = f1;
  if (is_two_parent(c)) {
    std::tie(f1, f2) = ordered_parents(rng);
    if (reversed_parents(c)) std::swap(f1, f2);
  }

  switch (c) {
    case TheoremCase::t3_1:
    case TheoremCase::t4_1:
    case TheoremCase::t4_3: {
      auto [x, y] = majorized_pair(rng, n, 0.1, 10.0);
      const bool full = c != TheoremCase::t3_1 || opts.full_majorization;
      Vec alpha = nonincreasing(full ? x : shrink(rng, x));
      Vec beta = nondecreasing(log_uniform(rng, 0.1, 5.0, n));
      return make_scenario(c, f1, f2, alpha, beta, nonincreasing(y), beta);
    }
    case TheoremCase::t3_2i:
    case TheoremCase::t3_2ii:
    case TheoremCase::t3_3i:
    case TheoremCase::t3_3ii:
    case TheoremCase::t4_2i:
    case TheoremCase::t4_2ii:
    case TheoremCase::t4_4i:
    case TheoremCase::t4_4ii: {
      auto [x, y] = majorized_pair(rng, n, 0.1, 5.0);
      Vec alpha = nonincreasing(log_uniform(rng, 0.1, 10.0, n));
      if (c == TheoremCase::t3_3i) x = grow(rng, x);
      if (c == TheoremCase::t3_3ii) x = shrink(rng, x);
      const bool increasing_cone = c == TheoremCase::t3_2i || c == TheoremCase::t3_3i || c == TheoremCase::t4_2i ||
                                   c == TheoremCase::t4_4i;
      auto order = increasing_cone ? nondecreasing : nonincreasing;
      return make_scenario(c, f1, f2, alpha, order(x), alpha, order(y));
    }
    case TheoremCase::t3_4: {
      const std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
      const std::size_t n2 = n - n1;
      const double a = log_uniform(rng, 0.2, 10.0);
      const double a_star = a * uniform(rng, 0.05, 0.95);
      // Moving d from the alpha block to the alpha* block keeps the total and,
      // with t < 1, the blocks in the same order.
      const double d = uniform(rng, 0.01, 0.99) * static_cast<double>(n1) * (a - a_star) / static_cast<double>(n);
      const double g_star = a_star + d;
      const double g = a - static_cast<double>(n2) / static_cast<double>(n1) * d;
      const double b = log_uniform(rng, 0.1, 5.0);
      const double b_star = b * uniform(rng, 1.05, 5.0);
      return make_scenario(c, f1, f2, blocks(n1, n2, a, a_star), blocks(n1, n2, b, b_star),
                           blocks(n1, n2, g, g_star), blocks(n1, n2, b, b_star));
    }
    case TheoremCase::t3_5i:
    case TheoremCase::t3_5ii: {
      for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const std::size_t n2 = n - n1;
        const double a = log_uniform(rng, 0.2, 10.0);
        const double a_star = a * uniform(rng, 0.05, 0.95);
        const double b = log_uniform(rng, 0.1, 5.0);
        const double b_star = c == TheoremCase::t3_5i ? b * uniform(rng, 0.2, 0.95) : b * uniform(rng, 1.05, 5.0);
        const double total = static_cast<double>(n1) * b + static_cast<double>(n2) * b_star;
        const double d_star =
            uniform(rng, total / static_cast<double>(n), total / static_cast<double>(n2));
        const double d = (total - static_cast<double>(n2) * d_star) / static_cast<double>(n1);
        if (!(d > 0.0) || !(d < d_star)) continue;
        Scenario s = make_scenario(c, f1, f2, blocks(n1, n2, a, a_star), blocks(n1, n2, b, b_star),
                                   blocks(n1, n2, a, a_star), blocks(n1, n2, d, d_star));
        if (hypothesis_failure(c, s).empty()) return s;
      }
      throw std::logic_error("no admissible two-block configuration found");
    }
  }
  throw std::logic_error("unhandled case");
}

Vec copy(std::span<const double> s) { return Vec(s.begin(), s.end()); }

bool same(std::span<const double> a, std::span<const double> b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

/// First index where the two-block pattern breaks, or the whole vector is one block.
bool two_blocks(std::span<const double> v, std::size_t& n1) {
  n1 = 1;
  while (n1 < v.size() && v[n1] == v[0]) ++n1;
  if (n1 == v.size()) return false;
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(n1), v.end(), [&](double x) { return x == v[n1]; });
}

bool premise_holds(const ParentDistribution& lo, const ParentDistribution& hi, const Grid& grid) {
  std::vector<double> s_values = premise_s_grid();
  s_values.push_back(1.0);
  for (double s : s_values) {
    const Direction d = power_hr_premise(lo, hi, s, grid).direction;
    if (d != Direction::increasing && d != Direction::constant) return false;
  }
  return true;
}

std::string two_parent_failure(TheoremCase c, const Scenario& s) {
  const ParentDistribution& f1 = s.u.parent();
  const ParentDistribution& f2 = s.v.parent();
  const bool reversed = reversed_parents(c);
  const ParentDistribution& lo = reversed ? f2 : f1;
  const ParentDistribution& hi = reversed ? f1 : f2;
  const Grid grid = s.make_grid();
  if (c == TheoremCase::t4_3 || c == TheoremCase::t4_4i || c == TheoremCase::t4_4ii) {
    if (!premise_holds(lo, hi, grid)) return "power premise on the parents fails for some s";
    return {};
  }
  for (double x : grid.points()) {
    const double l = lo.log_sf(x);
    const double h = hi.log_sf(x);
    if (l > h + 1e-12 * std::max(1.0, std::abs(h))) return fmt::format("parents not st ordered at x={}", x);
  }
  return {};
}

}  // namespace

std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::t3_1: return "3.1";
    case TheoremCase::t3_2i: return "3.2i";
    case TheoremCase::t3_2ii: return "3.2ii";
    case TheoremCase::t3_3i: return "3.3i";
    case TheoremCase::t3_3ii: return "3.3ii";
    case TheoremCase::t3_4: return "3.4";
    case TheoremCase::t3_5i: return "3.5i";
    case TheoremCase::t3_5ii: return "3.5ii";
    case TheoremCase::t4_1: return "4.1";
    case TheoremCase::t4_2i: return "4.2i";
    case TheoremCase::t4_2ii: return "4.2ii";
    case TheoremCase::t4_3: return "4.3";
    case TheoremCase::t4_4i: return "4.4i";
    case TheoremCase::t4_4ii: return "4.4ii";
  }
  return "?";
}

std::vector<TheoremCase> parse_theorem_id(std::string_view text) {
  static const TheoremCase all[] = {TheoremCase::t3_1,  TheoremCase::t3_2i,  TheoremCase::t3_2ii, TheoremCase::t3_3i,
                                    TheoremCase::t3_3ii, TheoremCase::t3_4,  TheoremCase::t3_5i,  TheoremCase::t3_5ii,
                                    TheoremCase::t4_1,  TheoremCase::t4_2i,  TheoremCase::t4_2ii, TheoremCase::t4_3,
                                    TheoremCase::t4_4i, TheoremCase::t4_4ii};
  std::vector<TheoremCase> out;
  for (TheoremCase c : all) {
    const std::string_view name = to_string(c);
    if (name == text) return {c};
    if (name.starts_with(text) && name.size() > text.size() && name[text.size()] == 'i') out.push_back(c);
  }
  if (out.empty()) throw ParameterDomainError(fmt::format("unknown theorem id '{}'", text));
  return out;
}

TheoremClaim claim_of(TheoremCase c) {
  switch (c) {
    case TheoremCase::t3_1:
    case TheoremCase::t3_2i:
    case TheoremCase::t3_3i:
    case TheoremCase::t4_3:
    case TheoremCase::t4_4i:
      return {Relation::hazard_rate, Result::holds_leq};
    case TheoremCase::t3_2ii:
    case TheoremCase::t3_3ii:
    case TheoremCase::t4_4ii:
      return {Relation::hazard_rate, Result::holds_geq};
    case TheoremCase::t3_4:
    case TheoremCase::t3_5ii:
      return {Relation::likelihood_ratio, Result::holds_leq};
    case TheoremCase::t3_5i:
      return {Relation::likelihood_ratio, Result::holds_geq};
    case TheoremCase::t4_1:
    case TheoremCase::t4_2i:
      return {Relation::usual_stochastic, Result::holds_leq};
    case TheoremCase::t4_2ii:
      return {Relation::usual_stochastic, Result::holds_geq};
  }
  throw std::logic_error("unhandled case");
}

std::vector<double> premise_s_grid() { return log_spaced(1e-2, 1e2, 50); }

Scenario generate_case(TheoremCase c, std::size_t n, std::mt19937_64& rng, const GeneratorOptions& opts) {
  if (n < 1) throw ParameterDomainError("series size must be at least 1");
  const bool two_block = c == TheoremCase::t3_4 || c == TheoremCase::t3_5i || c == TheoremCase::t3_5ii;
  if (two_block && n < 2) throw ParameterDomainError("two-block cases need n >= 2");
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Scenario s = draw(c, n, rng, opts);
    if (hypothesis_failure(c, s).empty()) {
      if (c == TheoremCase::t3_1 && opts.full_majorization &&
          !compare(ShapeVector(copy(s.u.alphas())), ShapeVector(copy(s.v.alphas()))).majorizes()) {
        continue;
      }
      return s;
    }
  }
  throw std::logic_error(fmt::format("generator for {} keeps violating its hypotheses", to_string(c)));
}

std::string hypothesis_failure(TheoremCase c, const Scenario& s) {
  const auto a = s.u.alphas();
  const auto b = s.u.betas();
  const auto g = s.v.alphas();
  const auto d = s.v.betas();
  if (!is_two_parent(c) && s.u.parent().name() != s.v.parent().name()) return "parents differ";

  switch (c) {
    case TheoremCase::t3_1:
    case TheoremCase::t4_1:
    case TheoremCase::t4_3: {
      if (!same(b, d)) return "beta differs between U and V";
      if (!in_D_plus(a) || !in_D_plus(g)) return "alpha or gamma not in D+";
      if (!in_E_plus(b)) return "beta not in E+";
      const MajorizationResult m = compare(ShapeVector(copy(a)), ShapeVector(copy(g)));
      if (c == TheoremCase::t3_1 ? !m.weak_super() : !m.majorizes()) return "alpha does not dominate gamma";
      break;
    }
    case TheoremCase::t3_2i:
    case TheoremCase::t3_2ii:
    case TheoremCase::t3_3i:
    case TheoremCase::t3_3ii:
    case TheoremCase::t4_2i:
    case TheoremCase::t4_2ii:
    case TheoremCase::t4_4i:
    case TheoremCase::t4_4ii: {
      if (!same(a, g)) return "alpha differs between U and V";
      if (!in_D_plus(a)) return "alpha not in D+";
      const bool e_cone = c == TheoremCase::t3_2i || c == TheoremCase::t3_3i || c == TheoremCase::t4_2i ||
                          c == TheoremCase::t4_4i;
      if (e_cone ? !(in_E_plus(b) && in_E_plus(d)) : !(in_D_plus(b) && in_D_plus(d))) {
        return e_cone ? "beta or delta not in E+" : "beta or delta not in D+";
      }
      const MajorizationResult m = compare(ShapeVector(copy(b)), ShapeVector(copy(d)));
      const bool ok = c == TheoremCase::t3_3i ? m.weak_sub() : c == TheoremCase::t3_3ii ? m.weak_super() : m.majorizes();
      if (!ok) return "beta does not dominate delta";
      break;
    }
    case TheoremCase::t3_4: {
      std::size_t n1 = 0, m1 = 0, k1 = 0;
      if (!same(b, d)) return "beta differs between U and V";
      if (!two_blocks(a, n1) || !two_blocks(g, m1) || !two_blocks(b, k1) || n1 != m1 || n1 != k1) {
        return "not a two-block configuration";
      }
      if (!(a.front() > a.back() && g.front() > g.back() && b.front() < b.back())) return "block order violated";
      if (!compare(ShapeVector(copy(a)), ShapeVector(copy(g))).majorizes()) return "alpha does not majorize gamma";
      break;
    }
    case TheoremCase::t3_5i:
    case TheoremCase::t3_5ii: {
      std::size_t n1 = 0, m1 = 0, k1 = 0;
      if (!same(a, g)) return "alpha differs between U and V";
      if (!two_blocks(a, n1) || !two_blocks(b, m1) || !two_blocks(d, k1) || n1 != m1 || n1 != k1) {
        return "not a two-block configuration";
      }
      const bool beta_down = c == TheoremCase::t3_5i;
      if (!(a.front() > a.back())) return "alpha <= alpha*";
      if (beta_down ? !(b.front() > b.back()) : !(b.front() < b.back())) return "beta block order violated";
      if (!(d.front() < d.back())) return "delta >= delta*";
      if (!compare(ShapeVector(copy(b)), ShapeVector(copy(d))).majorizes()) return "beta does not majorize delta";
      break;
    }
  }
  if (is_two_parent(c)) return two_parent_failure(c, s);
  return {};
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.passed; }));
}

std::string SuiteReport::text() const {
  std::string out = fmt::format("theorem {}: {}/{} passed (seed {})\n", id, passed(), trials.size(), seed);
  std::vector<TheoremCase> seen;
  for (const auto& t : trials) {
    if (std::find(seen.begin(), seen.end(), t.which) == seen.end()) seen.push_back(t.which);
  }
  for (TheoremCase c : seen) {
    std::size_t total = 0, ok = 0, refined = 0;
    for (const auto& t : trials) {
      if (t.which != c) continue;
      ++total;
      ok += t.passed ? 1 : 0;
      refined += t.refined ? 1 : 0;
    }
    const TheoremClaim claim = claim_of(c);
    out += fmt::format("  {} {} expected {}: {}/{}", to_string(c), to_string(claim.relation),
                       to_string(claim.expected), ok, total);
    if (refined > 0) out += fmt::format(" ({} settled on refined grids)", refined);
    out += "\n";
  }
  for (const auto& t : trials) {
    if (t.passed) continue;
    out += fmt::format("  trial {} ({}, n={}) FAILED: {}\n", t.index, to_string(t.which), t.n, t.detail);
    out += "  replay:\n";
    std::size_t pos = 0;
    while (pos < t.replay.size()) {
      const auto end = t.replay.find('\n', pos);
      out += "    " + t.replay.substr(pos, end - pos) + "\n";
      pos = end == std::string::npos ? t.replay.size() : end + 1;
    }
  }
  return out;
}

SuiteReport verify_theorem(std::string_view id, std::size_t trials, std::uint64_t seed, const RunOptions& opts,
                           const SuiteOptions& suite) {
  if (trials == 0) throw ParameterDomainError("trials must be at least 1");
  if (suite.sizes.empty()) throw ParameterDomainError("no series sizes given");
  const std::vector<TheoremCase> cases = parse_theorem_id(id);
  const CheckOptions copts = to_check_options(opts);

  SuiteReport report;
  report.id = std::string(id);
  report.seed = seed;
  report.trials.resize(trials);

  auto run_trial = [&](std::size_t k) {
    TrialOutcome& out = report.trials[k];
    out.index = k;
    out.which = cases[k % cases.size()];
    out.n = suite.sizes[k % suite.sizes.size()];
    try {
      const std::uint64_t trial_seed = derive_substream_seed(seed, k);
      std::mt19937_64 rng(trial_seed);
      Scenario s = generate_case(out.which, out.n, rng, suite.generator);
      s.name = fmt::format("{}-trial{}", to_string(out.which), k);
      s.seed = trial_seed;
      const TheoremClaim claim = claim_of(out.which);
      const Relation rel = suite.relation.value_or(claim.relation);
      s.relations = {rel};
      s.expect = {{rel, claim.expected}};
      if (opts.grid_points) s.grid.points = *opts.grid_points;

      const Grid grid = s.make_grid();
      OrderingVerdict v = opts.refine ? check_refined(rel, s.u, s.v, grid, copts) : check(rel, s.u, s.v, grid, copts);
      if (v.result != claim.expected && !opts.refine) {
        v = check_refined(rel, s.u, s.v, grid, copts);
        out.refined = true;
      }
      out.result = v.result;
      out.passed = v.result == claim.expected;
      out.detail = format_verdict(v);
      if (!out.passed) out.replay = serialize_scenario(s);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail = fmt::format("error: {}", e.what());
    }
  };

  unsigned threads = suite.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : suite.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
  if (threads <= 1) {
    for (std::size_t k = 0; k < trials; ++k) run_trial(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < trials; k = next++) run_trial(k);
      });
    }
  }
  return report;
}

}  // namespace kwg
