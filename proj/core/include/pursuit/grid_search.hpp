#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pursuit/policies.hpp"
#include "pursuit/runner.hpp"

namespace pursuit {

/// One hyperparameter and the values to try for it.
struct GridAxis {
  std::string parameter;
  std::vector<double> values;
};

/// Cartesian product of the axes applied to `base`, last axis varying fastest.
/// An empty axis list yields {base}.
std::vector<PolicyConfig> expand_grid(const PolicyConfig& base, const std::vector<GridAxis>& axes);

struct GridCellScore {
  PolicyConfig config;
  double capture_rate = 0.0;
  double mean_capture_timestep = 0.0;
};

struct GridSearchResult {
  std::size_t best_index = 0;
  std::vector<GridCellScore> table;

  const GridCellScore& best() const { return table.at(best_index); }
};

/// Scores every cell over all scenarios (`episodes_per_cell` episodes each, the
/// same seeds for every cell) and picks the highest capture rate, then the lower
/// mean capture timestep, then the earlier cell. Throws std::invalid_argument
/// when `cells` or `scenarios` is empty.
GridSearchResult grid_search(const std::vector<PolicyConfig>& cells,
                             const std::vector<ScenarioSource>& scenarios,
                             std::size_t episodes_per_cell, std::uint64_t seed,
                             const EpisodeOptions& options = {}, unsigned workers = 0);

}  // namespace pursuit
