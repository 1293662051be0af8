#include "pursuit/grid_search.hpp"

#include <stdexcept>

namespace pursuit {

std::vector<PolicyConfig> expand_grid(const PolicyConfig& base, const std::vector<GridAxis>& axes) {
  std::vector<PolicyConfig> cells{base};
  for (const GridAxis& axis : axes) {
    if (axis.values.empty()) {
      throw std::invalid_argument("grid axis '" + axis.parameter + "' has no values");
    }
    std::vector<PolicyConfig> next;
    next.reserve(cells.size() * axis.values.size());
    for (const PolicyConfig& cell : cells) {
      for (double v : axis.values) {
        PolicyConfig c = cell;
        set_policy_parameter(c, axis.parameter, v);
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

GridSearchResult grid_search(const std::vector<PolicyConfig>& cells,
                             const std::vector<ScenarioSource>& scenarios,
                             std::size_t episodes_per_cell, std::uint64_t seed,
                             const EpisodeOptions& options, unsigned workers) {
  if (cells.empty()) throw std::invalid_argument("grid search needs at least one cell");
  if (scenarios.empty()) throw std::invalid_argument("grid search needs at least one scenario");
  if (episodes_per_cell == 0) throw std::invalid_argument("episodes_per_cell must be positive");

  GridSearchResult out;
  for (const PolicyConfig& cell : cells) {
    std::vector<EpisodeResult> all;
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
      EvaluationRequest request;
      request.scenario = scenarios[s];
      request.policy = cell;
      request.episodes = episodes_per_cell;
      request.seed = seed + s * episodes_per_cell;
      request.workers = workers;
      request.options = options;
      const auto results = evaluate(request);
      all.insert(all.end(), results.begin(), results.end());
    }
    const Metrics m = aggregate_metrics(all);
    out.table.push_back({cell, m.capture_rate, m.mean_capture_timestep});
  }

  for (std::size_t i = 1; i < out.table.size(); ++i) {
    const GridCellScore& a = out.table[i];
    const GridCellScore& b = out.table[out.best_index];
    if (a.capture_rate > b.capture_rate ||
        (a.capture_rate == b.capture_rate && a.mean_capture_timestep < b.mean_capture_timestep)) {
      out.best_index = i;
    }
  }
  return out;
}

}  // namespace pursuit
