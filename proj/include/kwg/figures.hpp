#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kwg/ordering.hpp"

namespace kwg {

/// Built-in curves: the three density ratios of the lr counterexamples
/// (3.1, 3.2i, 3.2ii), the power-premise ratio at s = 0.02 and s = 1.98
/// (4.1i, 4.1ii) and the survival ratio of the two-parent hr example (4.2).
enum class FigureId { f3_1, f3_2i, f3_2ii, f4_1i, f4_1ii, f4_2 };

FigureId parse_figure_id(std::string_view text);  // throws ParameterDomainError
std::string_view to_string(FigureId id);

struct FigureData {
  FigureId id = FigureId::f3_1;
  std::string t_name;       ///< "u" or "y"
  std::string value_name;   ///< what the value column holds
  std::vector<double> t;    ///< in increasing-x order (y decreasing for y-grids)
  std::vector<double> x;
  std::vector<double> value;
  Direction claimed = Direction::non_monotone;
  MonotonicityReport scan;

  bool claim_holds() const { return scan.direction == claimed; }
  /// Header `t,value`, 17 significant digits, LF line endings.
  std::string csv() const;
  std::string verdict_line() const;
};

/// Evaluates the curve on its default grid ([1e-6, 1 - 1e-6], `points` points).
/// Ratios of the 4.x curves overflow a double on that range, so they are
/// written as natural logs; monotonicity is unaffected.
FigureData reproduce(FigureId id, std::size_t points = 2001, double slope_tol = 1e-9);

}  // namespace kwg
