#include "pursuit/world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pursuit/errors.hpp"

namespace pursuit {

WorldState WorldState::initial(const TaskParams& task) {
  WorldState world;
  world.task = task;
  world.drones.reserve(task.external.drone_spawns.size());
  for (const Vec3& spawn : task.external.drone_spawns) {
    world.drones.push_back(DroneState{spawn, {}, Quaternion::identity(), {}});
  }
  world.evader.position = task.external.evader_spawn;
  return world;
}

bool inside_arena(const Vec3& p, const ArenaSpec& arena, double tol) {
  return horizontal_norm(p) <= arena.radius + tol && p.z >= -tol && p.z <= arena.height + tol;
}

bool inside_obstacle(const Vec3& p, const Obstacle& obstacle) {
  const double dx = p.x - obstacle.center_xy.x;
  const double dy = p.y - obstacle.center_xy.y;
  return std::hypot(dx, dy) <= obstacle.radius && p.z >= 0.0 && p.z <= obstacle.height;
}

Vec3 closest_point_on_obstacle(const Vec3& p, const Obstacle& obstacle) {
  const double dx = p.x - obstacle.center_xy.x;
  const double dy = p.y - obstacle.center_xy.y;
  const double r = std::hypot(dx, dy);
  Vec3 q = p;
  if (r > obstacle.radius) {
    q.x = obstacle.center_xy.x + dx * (obstacle.radius / r);
    q.y = obstacle.center_xy.y + dy * (obstacle.radius / r);
  }
  q.z = std::clamp(p.z, 0.0, obstacle.height);
  return q;
}

Vec3 closest_surface_point(const Vec3& p, const Obstacle& obstacle) {
  if (!inside_obstacle(p, obstacle)) return closest_point_on_obstacle(p, obstacle);

  const double dx = p.x - obstacle.center_xy.x;
  const double dy = p.y - obstacle.center_xy.y;
  const double r = std::hypot(dx, dy);
  const double to_wall = obstacle.radius - r;
  const double to_top = obstacle.height - p.z;
  if (to_top <= to_wall) return {p.x, p.y, obstacle.height};
  // On the axis every wall point is equally close; take +x.
  const double ux = r > 0.0 ? dx / r : 1.0;
  const double uy = r > 0.0 ? dy / r : 0.0;
  return {obstacle.center_xy.x + ux * obstacle.radius, obstacle.center_xy.y + uy * obstacle.radius,
          p.z};
}

double distance_to_obstacle(const Vec3& p, const Obstacle& obstacle) {
  return distance(p, closest_point_on_obstacle(p, obstacle));
}

// ---------------------------------------------------------------------------

namespace {

std::string indexed(std::string_view field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw ValidationError(path, what);
}

bool finite(const Vec3& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

}  // namespace

void validate(const ArenaSpec& arena) {
  require(std::isfinite(arena.radius) && arena.radius > 0.0, "arena.radius", "must be positive");
  require(std::isfinite(arena.height) && arena.height > 0.0, "arena.height", "must be positive");
}

void validate(const IntrinsicParams& intrinsic, const ArenaSpec& arena) {
  require(std::isfinite(intrinsic.capture_radius) && intrinsic.capture_radius > 0.0,
          "intrinsic.capture_radius", "must be positive");
  require(intrinsic.capture_radius <= arena.radius, "intrinsic.capture_radius",
          "must not exceed the arena radius");
  require(std::isfinite(intrinsic.evader_speed) && intrinsic.evader_speed >= 0.0,
          "intrinsic.evader_speed", "must be non-negative");
}

void validate(const ExternalParams& external, const ArenaSpec& arena, double drone_size) {
  constexpr double kTol = 1e-9;

  for (std::size_t j = 0; j < external.obstacles.size(); ++j) {
    const Obstacle& o = external.obstacles[j];
    const std::string path = indexed("obstacles", j);
    require(std::isfinite(o.radius) && o.radius > 0.0, path + ".radius", "must be positive");
    require(std::isfinite(o.height) && o.height > 0.0, path + ".height", "must be positive");
    require(o.height <= arena.height + kTol, path + ".height", "exceeds the arena height");
    const double reach = std::hypot(o.center_xy.x, o.center_xy.y) + o.radius;
    require(std::isfinite(reach) && reach <= arena.radius + kTol, path,
            "footprint leaves the arena circle");
  }

  require(!external.drone_spawns.empty(), "drones", "at least one drone is required");

  std::vector<std::pair<std::string, Vec3>> agents;
  for (std::size_t i = 0; i < external.drone_spawns.size(); ++i) {
    agents.emplace_back(indexed("drones", i), external.drone_spawns[i]);
  }
  agents.emplace_back("evader", external.evader_spawn);

  for (const auto& [path, p] : agents) {
    require(finite(p), path, "must be finite");
    require(inside_arena(p, arena, kTol), path, "outside the arena cylinder");
    for (std::size_t j = 0; j < external.obstacles.size(); ++j) {
      require(!inside_obstacle(p, external.obstacles[j]), path,
              "inside " + indexed("obstacles", j));
    }
  }
  const double min_separation = 2.0 * drone_size;
  for (std::size_t a = 0; a < agents.size(); ++a) {
    for (std::size_t b = a + 1; b < agents.size(); ++b) {
      require(distance(agents[a].second, agents[b].second) >= min_separation - kTol,
              agents[b].first, "closer than " + std::to_string(min_separation) + " m to " +
                                   agents[a].first);
    }
  }
}

void validate(const TaskParams& task, double drone_size) {
  validate(task.arena);
  validate(task.intrinsic, task.arena);
  validate(task.external, task.arena, drone_size);
}

// ---------------------------------------------------------------------------

namespace {

// Uniform point in a disk of the given radius, by rejection from the bounding square.
Vec2 sample_disk(Rng& rng, double radius) {
  while (true) {
    const double x = rng.uniform(-radius, radius);
    const double y = rng.uniform(-radius, radius);
    if (x * x + y * y <= radius * radius) return {x, y};
  }
}

bool clear_of_obstacles(const Vec3& p, const std::vector<Obstacle>& obstacles, double clearance) {
  for (const Obstacle& o : obstacles) {
    const double r = std::hypot(p.x - o.center_xy.x, p.y - o.center_xy.y);
    if (r < o.radius + clearance && p.z < o.height + clearance) return false;
  }
  return true;
}

}  // namespace

ExternalParams sample_external_params(Rng& rng, const RandomizationConfig& config) {
  validate(config.arena);
  if (config.num_drones == 0) throw std::invalid_argument("num_drones must be at least 1");
  if (config.min_obstacles > config.max_obstacles) {
    throw std::invalid_argument("min_obstacles exceeds max_obstacles");
  }
  if (config.drone_size <= 0.0 || 2.0 * config.drone_size >= config.arena.height) {
    throw std::invalid_argument("drone_size incompatible with the arena height");
  }

  const ArenaSpec& arena = config.arena;
  ExternalParams out;

  if (config.fixed_obstacles) {
    out.obstacles = *config.fixed_obstacles;
  } else {
    const std::uint64_t span = config.max_obstacles - config.min_obstacles + 1;
    const std::size_t count = config.min_obstacles + rng.uniform_index(span);
    const double center_limit = arena.radius - config.obstacle_radius;
    if (count > 0 && center_limit < 0.0) {
      throw SamplingError("obstacle radius does not fit inside the arena");
    }
    if (!config.continuous_heights && count > 0 && config.obstacle_heights.empty()) {
      throw std::invalid_argument("obstacle height set is empty");
    }
    for (std::size_t j = 0; j < count; ++j) {
      Obstacle o;
      o.center_xy = sample_disk(rng, center_limit);
      o.radius = config.obstacle_radius;
      if (config.continuous_heights) {
        // (0, h]: flip the half-open [0, 1) draw.
        o.height = arena.height * (1.0 - rng.uniform01());
      } else {
        o.height = config.obstacle_heights[rng.uniform_index(config.obstacle_heights.size())];
      }
      out.obstacles.push_back(o);
    }
  }

  // Spawn points keep one drone size from the walls, floor, and ceiling.
  const double margin = config.drone_size;
  const double spawn_radius = arena.radius - margin;
  if (spawn_radius <= 0.0) throw SamplingError("arena too small for the drone size");
  const double min_separation = 2.0 * config.drone_size;

  std::vector<Vec3> placed;
  auto place = [&](std::string_view who) {
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
      const Vec2 xy = sample_disk(rng, spawn_radius);
      const Vec3 p{xy.x, xy.y, rng.uniform(margin, arena.height - margin)};
      if (!clear_of_obstacles(p, out.obstacles, 0.5 * config.drone_size)) continue;
      const bool separated = std::all_of(placed.begin(), placed.end(), [&](const Vec3& q) {
        return distance(p, q) >= min_separation;
      });
      if (!separated) continue;
      placed.push_back(p);
      return p;
    }
    throw SamplingError("could not place " + std::string(who) + " within " +
                        std::to_string(config.max_attempts) + " attempts");
  };

  for (std::size_t i = 0; i < config.num_drones; ++i) {
    out.drone_spawns.push_back(place("drone " + std::to_string(i)));
  }
  out.evader_spawn = place("evader");
  return out;
}

}  // namespace pursuit
