#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kwg/runner.hpp"
#include "kwg/scenario.hpp"

namespace kwg {

/// One branch of an ordering result that can be exercised by random trials.
///
///  3.1   alpha, gamma in D+, beta in E+, alpha weakly supermajorizes gamma    -> hr <=
///  3.2i  beta majorizes delta, both in E+, alpha in D+                        -> hr <=
///  3.2ii beta majorizes delta, both in D+, alpha in D+                        -> hr >=
///  3.3i  beta weakly submajorizes delta, both in E+, alpha in D+              -> hr <=
///  3.3ii beta weakly supermajorizes delta, both in D+, alpha in D+            -> hr >=
///  3.4   two blocks, alpha > alpha*, gamma > gamma*, beta < beta*,
///        (alpha block) majorizes (gamma block)                                -> lr <=
///  3.5i  two blocks, beta block majorizes delta block,
///        alpha > alpha*, beta > beta*, delta < delta*                          -> lr >=
///  3.5ii same with beta < beta*                                               -> lr <=
///  4.1   as 3.1 with full majorization, X1 <=st X2                            -> st <=
///  4.2i  as 3.2i, X1 <=st X2                                                   -> st <=
///  4.2ii as 3.2ii, X1 >=st X2                                                  -> st >=
///  4.3   as 4.1, X1^s <=hr X2^s for all s                                      -> hr <=
///  4.4i  as 4.2i, X1^s <=hr X2^s                                               -> hr <=
///  4.4ii as 4.2ii, X1^s >=hr X2^s                                              -> hr >=
///
/// U uses parent F1 and V uses F2; the 3.x cases share a uniform parent.
enum class TheoremCase { t3_1, t3_2i, t3_2ii, t3_3i, t3_3ii, t3_4, t3_5i, t3_5ii, t4_1, t4_2i, t4_2ii, t4_3,
                         t4_4i, t4_4ii };

std::string_view to_string(TheoremCase c);

/// "3.2" expands to both branches, "3.2i" to one. Throws ParameterDomainError.
std::vector<TheoremCase> parse_theorem_id(std::string_view text);

struct TheoremClaim {
  Relation relation;
  Result expected;
};
TheoremClaim claim_of(TheoremCase c);

struct GeneratorOptions {
  /// Case 3.1 only: draw alpha majorizing gamma instead of the weaker premise.
  bool full_majorization = false;
};

/// Random configuration of size n satisfying the case's hypotheses. The result
/// is checked with hypothesis_failure before it is returned.
Scenario generate_case(TheoremCase c, std::size_t n, std::mt19937_64& rng, const GeneratorOptions& opts = {});

/// Empty when every hypothesis of the case holds, otherwise the first that fails.
std::string hypothesis_failure(TheoremCase c, const Scenario& scenario);

/// s values on which the power premise of 4.3/4.4 is verified: 50 log-spaced
/// points in [1e-2, 1e2].
std::vector<double> premise_s_grid();

struct TrialOutcome {
  std::size_t index = 0;
  TheoremCase which = TheoremCase::t3_1;
  std::size_t n = 0;
  Result result = Result::inconclusive;  ///< after refinement when the first verdict missed
  bool passed = false;
  bool refined = false;
  std::string detail;  ///< verdict line, or the error that aborted the trial
  std::string replay;  ///< serialized scenario, kept for failures
};

struct SuiteOptions {
  std::vector<std::size_t> sizes = {2, 3, 5};  ///< trial k uses sizes[k % sizes.size()]
  std::optional<Relation> relation;            ///< check this relation instead of the case's own
  GeneratorOptions generator;
  unsigned threads = 0;                        ///< 0: hardware concurrency
};

struct SuiteReport {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<TrialOutcome> trials;  ///< by trial index

  std::size_t passed() const;
  bool all_passed() const { return passed() == trials.size(); }
  std::string text() const;
};

/// Trial k draws from mt19937_64(derive_substream_seed(seed, k)) and uses
/// case cases[k % cases.size()]. A miss is re-checked on doubled grids and
/// only counts as a failure if it persists. Throws ParameterDomainError when
/// trials = 0.
SuiteReport verify_theorem(std::string_view id, std::size_t trials, std::uint64_t seed, const RunOptions& opts = {},
                           const SuiteOptions& suite = {});

}  // namespace kwg
