#include "pursuit/evader.hpp"

#include <algorithm>
#include <cmath>

namespace pursuit {

namespace {

// offset / |offset|^2, saturating at magnitude 1/eps. A zero offset has no
// direction and contributes nothing.
Vec3 inverse_distance_term(const Vec3& offset, double eps) {
  const double d = norm(offset);
  if (d >= eps) return offset / (d * d);
  if (d == 0.0) return {};
  return offset * (1.0 / (d * eps));
}

// unit / d with d floored at eps.
Vec3 boundary_term(const Vec3& unit, double d, double eps) { return unit / std::max(d, eps); }

}  // namespace

EvaderForceBreakdown evader_force(const WorldState& world, const EvaderConfig& config) {
  const Vec3& xe = world.evader.position;
  const ArenaSpec& arena = world.task.arena;
  const double eps = config.epsilon;

  EvaderForceBreakdown f;
  f.drone_terms.reserve(world.drones.size());
  for (const DroneState& drone : world.drones) {
    f.drone_terms.push_back(inverse_distance_term(xe - drone.position, eps));
  }

  f.obstacle_terms.reserve(world.task.external.obstacles.size());
  for (const Obstacle& obstacle : world.task.external.obstacles) {
    const Vec3 surface = closest_surface_point(xe, obstacle);
    // Inside the volume the push is toward the nearest way out.
    const Vec3 away = inside_obstacle(xe, obstacle) ? surface - xe : xe - surface;
    f.obstacle_terms.push_back(inverse_distance_term(away, eps));
  }

  f.boundary_terms[0] = boundary_term({0.0, 0.0, 1.0}, xe.z, eps);
  f.boundary_terms[1] = boundary_term({0.0, 0.0, -1.0}, arena.height - xe.z, eps);
  const double r = horizontal_norm(xe);
  if (r > 0.0) {
    f.boundary_terms[2] = boundary_term({-xe.x / r, -xe.y / r, 0.0}, arena.radius - r, eps);
  }

  Vec3 total;
  for (const Vec3& t : f.drone_terms) total += t;
  for (const Vec3& t : f.obstacle_terms) total += t;
  for (const Vec3& t : f.boundary_terms) total += t;
  f.total = total;
  return f;
}

namespace {

Vec3 velocity_from_field(const Vec3& total, const WorldState& world, const EvaderConfig& config) {
  const double speed = world.task.intrinsic.evader_speed;
  if (speed == 0.0) return {};
  if (config.mode == EvaderSpeedMode::kFieldLiteral) return speed * total;

  const double n = norm(total);
  if (n > config.direction_epsilon) return total * (speed / n);
  if (world.evader.last_heading) return speed * *world.evader.last_heading;
  return {};
}

}  // namespace

Vec3 evader_velocity(const WorldState& world, const EvaderConfig& config) {
  return velocity_from_field(evader_force(world, config).total, world, config);
}

EvaderState step_evader(const WorldState& world, double dt, const EvaderConfig& config) {
  const Vec3 total = evader_force(world, config).total;
  EvaderState next = world.evader;
  next.velocity = velocity_from_field(total, world, config);

  const double n = norm(total);
  if (n > config.direction_epsilon) next.last_heading = total / n;

  ArenaSpec inner = world.task.arena;
  const double inset = std::min(config.boundary_inset, 0.25 * inner.height);
  inner.radius = std::max(inner.radius - inset, 0.0);
  Vec3 p = world.evader.position + dt * next.velocity;
  const double r = horizontal_norm(p);
  if (r > inner.radius) {
    p.x *= inner.radius / r;
    p.y *= inner.radius / r;
  }
  p.z = std::clamp(p.z, inset, inner.height - inset);
  next.position = p;
  return next;
}

}  // namespace pursuit
