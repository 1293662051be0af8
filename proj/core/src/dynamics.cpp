#include "pursuit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pursuit {

void validate(const QuadrotorParams& params) {
  if (!(params.mass > 0.0) || !(params.gravity > 0.0) || !(params.max_speed > 0.0) ||
      !(params.dt > 0.0)) {
    throw std::invalid_argument("quadrotor mass, gravity, max_speed and dt must be positive");
  }
  if (params.rate_time_constant < 0.0 || params.velocity_time_constant < 0.0) {
    throw std::invalid_argument("time constants must be non-negative");
  }
}

Vec3 clamp_to_arena(const Vec3& position, const ArenaSpec& arena) {
  Vec3 out = position;
  const double r = horizontal_norm(position);
  if (r > arena.radius) {
    const double s = arena.radius / r;
    out.x *= s;
    out.y *= s;
  }
  out.z = std::clamp(position.z, 0.0, arena.height);
  return out;
}

namespace {

// exp(-dt / tau); tau == 0 means the target is reached within the step.
double lag_retention(double dt, double tau) { return tau > 0.0 ? std::exp(-dt / tau) : 0.0; }

// Moves the integrated position back into the arena and drops the velocity
// component that pushed it out.
void confine(DroneState& s, const ArenaSpec& arena) {
  const Vec3 clamped = clamp_to_arena(s.position, arena);
  if (clamped == s.position) return;

  const double r = horizontal_norm(s.position);
  if (r > arena.radius) {
    const Vec3 outward{s.position.x / r, s.position.y / r, 0.0};
    const double radial = dot(s.velocity, outward);
    if (radial > 0.0) s.velocity -= radial * outward;
  }
  if (s.position.z < 0.0 && s.velocity.z < 0.0) s.velocity.z = 0.0;
  if (s.position.z > arena.height && s.velocity.z > 0.0) s.velocity.z = 0.0;
  s.position = clamped;
}

}  // namespace

DroneState step_velocity_model(const DroneState& state, const VelocityCommand& command,
                               const QuadrotorParams& params, const ArenaSpec& arena) {
  const Vec3 target = clamp_norm(command.velocity, params.max_speed);
  const double keep = lag_retention(params.dt, params.velocity_time_constant);

  DroneState next = state;
  // Convex combination of two vectors inside the speed ball stays inside it.
  next.velocity = target + keep * (state.velocity - target);
  next.velocity = clamp_norm(next.velocity, params.max_speed);
  next.position = state.position + params.dt * next.velocity;
  next.body_rate = {};
  confine(next, arena);

  const double horizontal_speed = std::hypot(next.velocity.x, next.velocity.y);
  next.orientation = horizontal_speed > 1e-9
                         ? Quaternion::from_yaw(std::atan2(next.velocity.y, next.velocity.x))
                         : Quaternion::identity();
  return next;
}

DroneState step_quadrotor_model(const DroneState& state, const ThrustRateCommand& command,
                                const QuadrotorParams& params, const ArenaSpec& arena) {
  const double max_thrust = 2.0 * params.mass * params.gravity;
  const double thrust = std::isfinite(command.thrust) ? std::clamp(command.thrust, 0.0, max_thrust)
                                                      : 0.0;
  const double keep = lag_retention(params.dt, params.rate_time_constant);

  DroneState next = state;
  next.body_rate = command.body_rate + keep * (state.body_rate - command.body_rate);
  next.orientation =
      (state.orientation * Quaternion::from_rotation_vector(params.dt * next.body_rate))
          .normalized();

  const Vec3 accel =
      (thrust * next.orientation.body_z() - Vec3{0.0, 0.0, params.mass * params.gravity}) /
      params.mass;
  next.velocity = clamp_norm(state.velocity + params.dt * accel, params.max_speed);
  next.position = state.position + params.dt * next.velocity;
  confine(next, arena);
  return next;
}

DroneState step_drone(const DroneState& state, const DroneCommand& command,
                      const QuadrotorParams& params, const ArenaSpec& arena) {
  return std::visit(
      [&](const auto& cmd) -> DroneState {
        using T = std::decay_t<decltype(cmd)>;
        if constexpr (std::is_same_v<T, VelocityCommand>) {
          return step_velocity_model(state, cmd, params, arena);
        } else {
          return step_quadrotor_model(state, cmd, params, arena);
        }
      },
      command);
}

}  // namespace pursuit
