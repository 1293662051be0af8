#pragma once

#include <array>
#include <vector>

#include "pursuit/geometry.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

enum class EvaderSpeedMode {
  /// Field gives the direction only; the evader always moves at exactly v_e.
  kConstantSpeed,
  /// Velocity is v_e times the raw field sum, as the formula is printed.
  kFieldLiteral,
};

struct EvaderConfig {
  EvaderSpeedMode mode = EvaderSpeedMode::kConstantSpeed;
  /// Distances below this saturate a term at magnitude 1/epsilon.
  double epsilon = 1e-6;
  /// Net fields at or below this norm have no direction.
  double direction_epsilon = 1e-9;
  /// After integration the evader is clamped this far inside every boundary.
  double boundary_inset = 1e-3;
};

/// Term-by-term potential field acting on the evader.
struct EvaderForceBreakdown {
  std::vector<Vec3> drone_terms;
  std::vector<Vec3> obstacle_terms;
  /// Ground, ceiling, lateral wall.
  std::array<Vec3, 3> boundary_terms{};
  Vec3 total;
};

/// Repulsion from every drone, every obstacle's nearest surface point, and the
/// three arena boundaries, each falling off as 1/distance.
EvaderForceBreakdown evader_force(const WorldState& world, const EvaderConfig& config = {});

/// Evader velocity for the current world. In constant-speed mode the norm is
/// exactly v_e whenever the field has a direction; otherwise the last heading
/// is held, or the evader stays still before it ever had one.
Vec3 evader_velocity(const WorldState& world, const EvaderConfig& config = {});

/// Advances the evader by one step of length `dt` and clamps it inside the arena.
EvaderState step_evader(const WorldState& world, double dt, const EvaderConfig& config = {});

}  // namespace pursuit
