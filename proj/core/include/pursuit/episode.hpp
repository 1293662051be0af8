#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pursuit/dynamics.hpp"
#include "pursuit/evader.hpp"
#include "pursuit/policies.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

inline constexpr double kCaptureBonus = 10.0;
inline constexpr double kCollisionPenalty = -1.0;

struct EpisodeOptions {
  int horizon = 800;
  /// Drones closer than this to an obstacle are penalized every step.
  double collision_radius = 0.1;
  bool capture_ends_episode = true;
  /// Observation slots reserved for obstacles (used by observation-based policies).
  std::size_t max_obstacles = 3;
  QuadrotorParams dynamics;
  EvaderConfig evader;
  bool record_trajectory = false;
};

struct EpisodeResult {
  bool captured = false;
  /// Step of the first capture, or the horizon when the evader escaped.
  int capture_timestep = 0;
  std::vector<double> per_drone_return;
  /// Sum over steps of the (shared) capture bonus.
  double capture_return = 0.0;
  TaskParams task;
  std::uint64_t seed = 0;

  friend bool operator==(const EpisodeResult&, const EpisodeResult&) = default;
};

struct TrajectoryRecord {
  int step = 0;
  std::vector<Vec3> drone_positions;
  std::vector<Vec3> drone_velocities;
  Vec3 evader_position;
  Vec3 evader_velocity;
  std::vector<double> rewards;
  bool captured = false;

  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

struct EpisodeOutcome {
  EpisodeResult result;
  std::vector<TrajectoryRecord> trajectory;
};

struct Metrics {
  double capture_rate = 0.0;
  double mean_capture_timestep = 0.0;
  std::size_t episode_count = 0;
};

/// Some drone is strictly closer than `capture_radius` to the evader.
bool check_capture(const WorldState& world, double capture_radius);

/// Per-drone reward of the current state: the capture bonus to every drone when
/// the evader is caught, plus the collision penalty for each drone closer than
/// `collision_radius` to any obstacle.
std::vector<double> compute_reward(const WorldState& world, double capture_radius,
                                   double collision_radius);

/// Runs one episode to capture (by default) or to the horizon.
///
/// The spawn state is checked for capture first and reported as step 0. Each
/// step t in [0, horizon) then asks the policy for commands, moves the drones
/// and the evader simultaneously from the pre-step state, scores the new state,
/// and records a capture at step t. Throws PolicyError when the policy fails.
EpisodeOutcome run_episode(const TaskParams& task, Policy& policy, std::uint64_t seed,
                           const EpisodeOptions& options = {});

/// Throws std::invalid_argument on an empty list.
Metrics aggregate_metrics(std::span<const EpisodeResult> results);

/// One JSON object per line.
void write_trajectory(std::ostream& out, std::span<const TrajectoryRecord> trajectory);

/// Serialized result, shared by report files and the bridge protocol.
std::string episode_result_json(const EpisodeResult& result);

}  // namespace pursuit
