#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kwg/grid.hpp"
#include "kwg/order_stats.hpp"
#include "kwg/ordering.hpp"

namespace kwg {

/// A comparison of two minima, U_{1:n} (series `u`) against V_{1:n} (series `v`).
///
/// Text form, one `key = value` per line, `#` starts a comment:
///
///     name        = example
///     parent      = uniform01            # or parent.u / parent.v
///     u.alphas    = [6.2, 4.1, 2]
///     u.betas     = [1, 2, 3]
///     v.n1 = 1                           # multiple-outlier form:
///     v.n2 = 2                           #   n1, n2, alpha, beta,
///     v.alpha = 3 ...                    #   alpha_star, beta_star
///     relation    = all                  # st | hr | lr | all | comma list
///     grid.kind   = u                    # x | u | y
///     grid.lo     = 1e-6
///     grid.hi     = 0.999999
///     grid.points = 2001
///     seed        = 42
///     output      = out.csv
///     expect.lr   = violated             # or `expect = ...` for all relations
struct Scenario {
  std::string name;
  HeterogeneousSeries u;
  HeterogeneousSeries v;
  std::vector<Relation> relations;
  GridSpec grid;
  std::uint64_t seed = 0;
  std::string output;
  std::map<Relation, Result> expect;

  /// Grid of the scenario; u-grids map through the parent of `u`.
  Grid make_grid() const { return Grid::make(grid, u.parent()); }
};

/// Throws ParseError with line and field on malformed input.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical text form; parse_scenario(serialize_scenario(s)) reproduces s exactly.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace kwg
