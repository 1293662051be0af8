#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/geometry.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

/// Drone edge length; also the occupancy-grid cell size and spawn spacing unit.
inline constexpr double kDroneSize = 0.1;

struct ArenaSpec {
  double radius = 0.9;
  double height = 1.2;

  friend bool operator==(const ArenaSpec&, const ArenaSpec&) = default;
};

/// Vertical cylinder standing on the ground.
struct Obstacle {
  Vec2 center_xy;
  double radius = 0.3;
  double height = 1.2;

  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

struct IntrinsicParams {
  double capture_radius = 0.12;
  double evader_speed = 2.4;

  friend bool operator==(const IntrinsicParams&, const IntrinsicParams&) = default;
};

struct ExternalParams {
  std::vector<Vec3> drone_spawns;
  Vec3 evader_spawn;
  std::vector<Obstacle> obstacles;

  friend bool operator==(const ExternalParams&, const ExternalParams&) = default;
};

struct TaskParams {
  IntrinsicParams intrinsic;
  ExternalParams external;
  ArenaSpec arena;

  friend bool operator==(const TaskParams&, const TaskParams&) = default;
};

struct DroneState {
  Vec3 position;
  Vec3 velocity;
  Quaternion orientation;
  Vec3 body_rate;

  friend bool operator==(const DroneState&, const DroneState&) = default;
};

struct EvaderState {
  Vec3 position;
  Vec3 velocity;
  /// Direction of the last nonzero field; empty until the field first has a direction.
  std::optional<Vec3> last_heading;

  friend bool operator==(const EvaderState&, const EvaderState&) = default;
};

struct WorldState {
  std::vector<DroneState> drones;
  EvaderState evader;
  int step_index = 0;
  TaskParams task;

  /// Initial state of a task: everyone at rest on their spawn points.
  static WorldState initial(const TaskParams& task);
};

// ---------------------------------------------------------------------------
// Geometry queries shared by the evader field, rewards, and heuristics.

bool inside_arena(const Vec3& p, const ArenaSpec& arena, double tol = 1e-9);

/// True when `p` lies in the closed obstacle volume.
bool inside_obstacle(const Vec3& p, const Obstacle& obstacle);

/// Closest point of the solid cylinder to `p` (p itself when inside).
Vec3 closest_point_on_obstacle(const Vec3& p, const Obstacle& obstacle);

/// Closest point of the cylinder's surface (lateral wall or top cap) to `p`.
/// For exterior points this equals closest_point_on_obstacle.
Vec3 closest_surface_point(const Vec3& p, const Obstacle& obstacle);

/// Euclidean distance from `p` to the solid cylinder; 0 inside.
double distance_to_obstacle(const Vec3& p, const Obstacle& obstacle);

// ---------------------------------------------------------------------------
// Validation. All functions throw ValidationError naming the field path.

void validate(const ArenaSpec& arena);
void validate(const IntrinsicParams& intrinsic, const ArenaSpec& arena);
void validate(const ExternalParams& external, const ArenaSpec& arena,
              double drone_size = kDroneSize);
void validate(const TaskParams& task, double drone_size = kDroneSize);

// ---------------------------------------------------------------------------
// Domain randomization.

struct RandomizationConfig {
  ArenaSpec arena;
  std::size_t num_drones = 3;
  std::size_t min_obstacles = 0;
  std::size_t max_obstacles = 3;
  double obstacle_radius = 0.3;
  /// Discrete height set; ignored when `continuous_heights` is set.
  std::vector<double> obstacle_heights{0.6, 1.2};
  /// Draw heights uniformly from (0, arena.height] instead of the discrete set.
  bool continuous_heights = false;
  /// When set, these obstacles are used verbatim and only spawns are sampled.
  std::optional<std::vector<Obstacle>> fixed_obstacles;
  double drone_size = kDroneSize;
  /// Per-point attempt budget for spawn/obstacle rejection sampling.
  int max_attempts = 10000;
};

/// Draws one domain-randomized layout. Not guaranteed feasible.
/// Throws SamplingError when a point exhausts `max_attempts`.
ExternalParams sample_external_params(Rng& rng, const RandomizationConfig& config);

// ---------------------------------------------------------------------------
// Scenario documents.

TaskParams load_scenario(std::string_view document);
std::string save_scenario(const TaskParams& task);

/// Names of the bundled scenario presets.
std::vector<std::string> preset_names();
/// Source of a bundled preset, or empty when the name is unknown.
std::optional<std::string_view> preset_document(std::string_view name);
/// Throws std::invalid_argument for unknown names.
TaskParams load_preset(std::string_view name);

}  // namespace pursuit
