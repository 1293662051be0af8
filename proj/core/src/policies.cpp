#include "pursuit/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pursuit {

std::vector<double> build_observation(const WorldState& world, std::size_t drone_index,
                                      std::size_t max_obstacles, int horizon) {
  const std::size_t n = world.drones.size();
  if (drone_index >= n) throw std::invalid_argument("drone index out of range");
  const auto& obstacles = world.task.external.obstacles;
  if (obstacles.size() > max_obstacles) {
    throw std::invalid_argument("world has more obstacles than observation slots");
  }
  if (horizon <= 0) throw std::invalid_argument("horizon must be positive");

  const DroneState& self = world.drones[drone_index];
  std::vector<double> obs;
  obs.reserve(observation_length(n, max_obstacles));
  auto push = [&obs](const Vec3& v) { obs.insert(obs.end(), {v.x, v.y, v.z}); };

  push(self.position);
  push(self.velocity);
  obs.insert(obs.end(), {self.orientation.w, self.orientation.x, self.orientation.y,
                         self.orientation.z});
  push(world.evader.position - self.position);
  push(world.evader.velocity - self.velocity);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != drone_index) push(world.drones[j].position - self.position);
  }
  obs.push_back(static_cast<double>(world.step_index) / static_cast<double>(horizon));
  for (std::size_t k = 0; k < max_obstacles; ++k) {
    if (k < obstacles.size()) {
      const Obstacle& o = obstacles[k];
      push(Vec3{o.center_xy.x, o.center_xy.y, 0.0} - self.position);
      obs.insert(obs.end(), {o.height, o.radius, 1.0});
    } else {
      obs.insert(obs.end(), 6, 0.0);
    }
  }
  return obs;
}

// ---------------------------------------------------------------------------

void validate(const PolicyConfig& config) {
  auto non_negative = [](double v, const char* what) {
    if (!(v >= 0.0)) throw std::invalid_argument(std::string(what) + " must be non-negative");
  };
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
  };
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, JanosovConfig>) {
          non_negative(c.prediction_horizon, "prediction_horizon");
          non_negative(c.peer_repulsion_gain, "peer_repulsion_gain");
          non_negative(c.wall_repulsion_gain, "wall_repulsion_gain");
          if (!(c.inertia >= 0.0 && c.inertia <= 1.0)) {
            throw std::invalid_argument("inertia must lie in [0, 1]");
          }
          if (c.command_delay_steps < 0) {
            throw std::invalid_argument("command_delay_steps must be non-negative");
          }
        } else if constexpr (std::is_same_v<T, ApfConfig>) {
          non_negative(c.attract_gain, "attract_gain");
          non_negative(c.obstacle_repulsion_gain, "obstacle_repulsion_gain");
          non_negative(c.peer_repulsion_gain, "peer_repulsion_gain");
          positive(c.obstacle_influence_radius, "obstacle_influence_radius");
          positive(c.peer_influence_radius, "peer_influence_radius");
        } else if constexpr (std::is_same_v<T, ExternalConfig>) {
          if (c.endpoint.empty()) throw std::invalid_argument("external policy needs an endpoint");
        }
      },
      config);
}

std::string policy_name(const PolicyConfig& config) {
  constexpr const char* kNames[] = {"angelani", "janosov", "apf", "external", "zero"};
  return kNames[config.index()];
}

PolicyConfig default_policy_config(std::string_view name) {
  if (name == "angelani" || name == "pursuit") return AngelaniConfig{};
  if (name == "janosov") return JanosovConfig{};
  if (name == "apf") return ApfConfig{};
  if (name == "zero") return ZeroConfig{};
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

void set_policy_parameter(PolicyConfig& config, std::string_view key, double value) {
  auto unknown = [&]() {
    return std::invalid_argument("policy '" + policy_name(config) + "' has no parameter '" +
                                 std::string(key) + "'");
  };
  if (auto* j = std::get_if<JanosovConfig>(&config)) {
    if (key == "prediction_horizon") j->prediction_horizon = value;
    else if (key == "inertia") j->inertia = value;
    else if (key == "peer_repulsion_gain") j->peer_repulsion_gain = value;
    else if (key == "wall_repulsion_gain") j->wall_repulsion_gain = value;
    else if (key == "command_delay_steps") {
      if (value != std::floor(value)) throw std::invalid_argument("command_delay_steps must be integral");
      j->command_delay_steps = static_cast<int>(value);
    } else throw unknown();
  } else if (auto* a = std::get_if<ApfConfig>(&config)) {
    if (key == "attract_gain") a->attract_gain = value;
    else if (key == "obstacle_repulsion_gain") a->obstacle_repulsion_gain = value;
    else if (key == "obstacle_influence_radius") a->obstacle_influence_radius = value;
    else if (key == "peer_repulsion_gain") a->peer_repulsion_gain = value;
    else if (key == "peer_influence_radius") a->peer_influence_radius = value;
    else throw unknown();
  } else {
    throw unknown();
  }
}

// ---------------------------------------------------------------------------

namespace {

// Direction pushing drone i away from drone j. Coincident drones are split
// along x, the lower index toward -x.
Vec3 separation_direction(const WorldState& world, std::size_t i, std::size_t j) {
  const Vec3 d = world.drones[i].position - world.drones[j].position;
  const double n = norm(d);
  if (n > 0.0) return d / n;
  return {i < j ? -1.0 : 1.0, 0.0, 0.0};
}

Vec3 scaled_to_speed(const Vec3& direction, double max_speed) {
  return normalized_or_zero(direction) * max_speed;
}

}  // namespace

VelocityCommand angelani_action(const WorldState& world, std::size_t drone_index,
                                double max_speed) {
  const Vec3 to_evader = world.evader.position - world.drones.at(drone_index).position;
  return {scaled_to_speed(to_evader, max_speed)};
}

VelocityCommand janosov_action(const WorldState& world, std::size_t drone_index,
                               const JanosovConfig& config, double max_speed) {
  const DroneState& self = world.drones.at(drone_index);
  const Vec3 xp = self.position;
  const Vec3& xe = world.evader.position;

  const double lead = std::min(distance(xe, xp) / max_speed, config.prediction_horizon);
  const Vec3 predicted = xe + lead * world.evader.velocity;
  Vec3 desired = scaled_to_speed(predicted - xp, max_speed);

  if (config.peer_repulsion_gain > 0.0) {
    for (std::size_t j = 0; j < world.drones.size(); ++j) {
      if (j == drone_index) continue;
      const double d = std::max(distance(xp, world.drones[j].position), kDroneSize);
      desired += (config.peer_repulsion_gain / (d * d)) *
                 separation_direction(world, drone_index, j);
    }
  }

  if (config.wall_repulsion_gain > 0.0) {
    const ArenaSpec& arena = world.task.arena;
    constexpr double kFloor = 1e-3;
    const double r = horizontal_norm(xp);
    Vec3 wall{0.0, 0.0, 1.0 / std::max(xp.z, kFloor) - 1.0 / std::max(arena.height - xp.z, kFloor)};
    if (r > 0.0) wall += Vec3{-xp.x / r, -xp.y / r, 0.0} / std::max(arena.radius - r, kFloor);
    desired += config.wall_repulsion_gain * wall;
  }

  const Vec3 blended = (1.0 - config.inertia) * desired + config.inertia * self.velocity;
  return {scaled_to_speed(blended, max_speed)};
}

VelocityCommand apf_action(const WorldState& world, std::size_t drone_index,
                           const ApfConfig& config, double max_speed) {
  const Vec3 xp = world.drones.at(drone_index).position;
  Vec3 force = config.attract_gain * normalized_or_zero(world.evader.position - xp);

  for (const Obstacle& o : world.task.external.obstacles) {
    const Vec3 away = xp - closest_point_on_obstacle(xp, o);
    const double d = norm(away);
    if (d >= config.obstacle_influence_radius) continue;
    if (d > 0.0) {
      force += (config.obstacle_repulsion_gain / (d * d)) * away;
    } else {
      // Inside the obstacle: leave through the nearest surface.
      const Vec3 out = closest_surface_point(xp, o) - xp;
      const double m = std::max(norm(out), kDroneSize);
      force += (config.obstacle_repulsion_gain / (m * m)) * out;
    }
  }

  for (std::size_t j = 0; j < world.drones.size(); ++j) {
    if (j == drone_index) continue;
    const Vec3 away = xp - world.drones[j].position;
    const double d = norm(away);
    if (d >= config.peer_influence_radius) continue;
    if (d > 0.0) {
      force += (config.peer_repulsion_gain / (d * d)) * away;
    } else {
      force += (config.peer_repulsion_gain / (kDroneSize * kDroneSize)) *
               separation_direction(world, drone_index, j);
    }
  }
  return {scaled_to_speed(force, max_speed)};
}

// ---------------------------------------------------------------------------

namespace {

template <typename Fn>
class HeuristicPolicy final : public Policy {
 public:
  HeuristicPolicy(Fn fn, int delay) : fn_(std::move(fn)), delay_(delay) {}

  std::vector<DroneCommand> act(const WorldState& world) override {
    std::vector<DroneCommand> out;
    out.reserve(world.drones.size());
    for (std::size_t i = 0; i < world.drones.size(); ++i) out.emplace_back(fn_(world, i));
    return out;
  }

  int command_delay_steps() const override { return delay_; }

 private:
  Fn fn_;
  int delay_;
};

template <typename Fn>
std::unique_ptr<Policy> heuristic(Fn fn, int delay = 0) {
  return std::make_unique<HeuristicPolicy<Fn>>(std::move(fn), delay);
}

}  // namespace

std::unique_ptr<Policy> make_policy(const PolicyConfig& config, double max_speed) {
  validate(config);
  return std::visit(
      [&](const auto& c) -> std::unique_ptr<Policy> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AngelaniConfig>) {
          return heuristic([max_speed](const WorldState& w, std::size_t i) {
            return angelani_action(w, i, max_speed);
          });
        } else if constexpr (std::is_same_v<T, JanosovConfig>) {
          return heuristic(
              [c, max_speed](const WorldState& w, std::size_t i) {
                return janosov_action(w, i, c, max_speed);
              },
              c.command_delay_steps);
        } else if constexpr (std::is_same_v<T, ApfConfig>) {
          return heuristic([c, max_speed](const WorldState& w, std::size_t i) {
            return apf_action(w, i, c, max_speed);
          });
        } else if constexpr (std::is_same_v<T, ZeroConfig>) {
          return heuristic([](const WorldState&, std::size_t) { return VelocityCommand{}; });
        } else {
          throw std::invalid_argument("external policies are created by the bridge");
        }
      },
      config);
}

}  // namespace pursuit
