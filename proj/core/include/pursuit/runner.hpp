#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/episode.hpp"
#include "pursuit/feasibility.hpp"
#include "pursuit/policies.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

/// Where each evaluation episode's task comes from.
///
/// A scenario pins the arena, intrinsic parameters, and (unless
/// `randomize_obstacles`) the obstacle layout. Spawn points are redrawn per
/// episode from the episode seed, through the feasibility filter, unless
/// `randomize_spawns` is false.
struct ScenarioSource {
  std::string name;
  TaskParams base;
  bool randomize_spawns = true;
  bool randomize_obstacles = false;
  std::size_t num_drones = 3;
  std::size_t max_obstacles = 3;
  std::vector<double> obstacle_heights{0.6, 1.2};
  double obstacle_radius = 0.3;
};

/// Scenario by preset name, scenario file path, or "random" (full domain
/// randomization over the default arena). Throws std::invalid_argument when
/// neither a preset nor a readable file matches.
ScenarioSource resolve_scenario(const std::string& name_or_path);

/// Filter configuration that draws layouts for this source.
FilterConfig filter_config_for(const ScenarioSource& source);

/// The task of one episode, fully determined by (source, episode_seed).
TaskParams episode_task(const ScenarioSource& source, std::uint64_t episode_seed);

struct EvaluationRequest {
  ScenarioSource scenario;
  PolicyConfig policy = AngelaniConfig{};
  std::size_t episodes = 1000;
  /// Episode k uses seed + k.
  std::uint64_t seed = 1;
  /// 0 = hardware concurrency.
  unsigned workers = 0;
  EpisodeOptions options;
};

/// Runs the episodes on a worker pool. Results are ordered by episode index and
/// do not depend on the worker count.
std::vector<EpisodeResult> evaluate(const EvaluationRequest& request);

/// Capture statistics over several independent seed groups.
struct MetricsSummary {
  std::string scenario;
  std::string policy;
  std::vector<Metrics> per_seed;
  double capture_rate_mean = 0.0;
  double capture_rate_std = 0.0;
  double capture_timestep_mean = 0.0;
  double capture_timestep_std = 0.0;
  std::size_t episodes_per_seed = 0;
};

/// Runs `seeds` groups of `request.episodes` episodes; group s starts at seed
/// request.seed + s * request.episodes, so groups never share an episode seed.
/// Standard deviations are population deviations across groups.
MetricsSummary evaluate_seeds(const EvaluationRequest& request, std::size_t seeds);

enum class SweepAxis { kCaptureRadius, kEvaderSpeed };

SweepAxis parse_sweep_axis(const std::string& name);
std::string sweep_axis_name(SweepAxis axis);

struct SweepRow {
  double value = 0.0;
  MetricsSummary summary;
};

/// One summary per axis value. Every value reuses the same episode seeds.
std::vector<SweepRow> sweep(const EvaluationRequest& request, SweepAxis axis,
                            const std::vector<double>& values, std::size_t seeds);

/// Comma-separated table with header
/// scenario,policy,capture_rate,capture_timestep_mean,capture_rate_std,capture_timestep_std,episodes,seeds
void write_metrics_table(std::ostream& out, const std::vector<MetricsSummary>& rows);

/// Same columns prefixed by axis,value.
void write_sweep_table(std::ostream& out, SweepAxis axis, const std::vector<SweepRow>& rows);

}  // namespace pursuit
