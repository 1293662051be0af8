#pragma once

#include <variant>

#include "pursuit/geometry.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

struct QuadrotorParams {
  double mass = 0.03;
  double gravity = 9.81;
  /// First-order lag of the body-rate loop, seconds.
  double rate_time_constant = 0.05;
  /// First-order lag of the velocity-tracking loop, seconds; 0 tracks instantly.
  double velocity_time_constant = 0.05;
  double max_speed = 1.0;
  double dt = 0.02;
};

/// Desired world-frame velocity for the velocity-tracking model.
struct VelocityCommand {
  Vec3 velocity;

  friend bool operator==(const VelocityCommand&, const VelocityCommand&) = default;
};

/// Collective thrust (N) and desired body rate (rad/s) for the quadrotor model.
struct ThrustRateCommand {
  double thrust = 0.0;
  Vec3 body_rate;

  friend bool operator==(const ThrustRateCommand&, const ThrustRateCommand&) = default;
};

using DroneCommand = std::variant<VelocityCommand, ThrustRateCommand>;

/// Throws std::invalid_argument on non-positive mass/gravity/max_speed/dt or
/// negative time constants.
void validate(const QuadrotorParams& params);

/// Projects `position` onto the closed arena cylinder. Interior points are unchanged.
Vec3 clamp_to_arena(const Vec3& position, const ArenaSpec& arena);

/// First-order velocity tracking toward the clamped command, then Euler position
/// update and arena projection. Orientation is yaw-aligned with the horizontal
/// velocity (identity when hovering in place).
DroneState step_velocity_model(const DroneState& state, const VelocityCommand& command,
                               const QuadrotorParams& params, const ArenaSpec& arena);

/// Reduced quadrotor: lagged body rate, quaternion integration, thrust along the
/// body z-axis against gravity, speed capped at max_speed, arena projection.
DroneState step_quadrotor_model(const DroneState& state, const ThrustRateCommand& command,
                                const QuadrotorParams& params, const ArenaSpec& arena);

/// Dispatches on the command kind.
DroneState step_drone(const DroneState& state, const DroneCommand& command,
                      const QuadrotorParams& params, const ArenaSpec& arena);

}  // namespace pursuit
