#include "pursuit/episode.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

bool check_capture(const WorldState& world, double capture_radius) {
  return std::any_of(world.drones.begin(), world.drones.end(), [&](const DroneState& d) {
    return distance(d.position, world.evader.position) < capture_radius;
  });
}

std::vector<double> compute_reward(const WorldState& world, double capture_radius,
                                   double collision_radius) {
  const double capture = check_capture(world, capture_radius) ? kCaptureBonus : 0.0;
  std::vector<double> rewards(world.drones.size(), capture);
  for (std::size_t i = 0; i < world.drones.size(); ++i) {
    const Vec3& p = world.drones[i].position;
    const bool collided = std::any_of(
        world.task.external.obstacles.begin(), world.task.external.obstacles.end(),
        [&](const Obstacle& o) { return distance_to_obstacle(p, o) < collision_radius; });
    if (collided) rewards[i] += kCollisionPenalty;
  }
  return rewards;
}

namespace {

TrajectoryRecord snapshot(const WorldState& world, int step, const std::vector<double>& rewards,
                          bool captured) {
  TrajectoryRecord r;
  r.step = step;
  for (const DroneState& d : world.drones) {
    r.drone_positions.push_back(d.position);
    r.drone_velocities.push_back(d.velocity);
  }
  r.evader_position = world.evader.position;
  r.evader_velocity = world.evader.velocity;
  r.rewards = rewards;
  r.captured = captured;
  return r;
}

}  // namespace

EpisodeOutcome run_episode(const TaskParams& task, Policy& policy, std::uint64_t seed,
                           const EpisodeOptions& options) {
  if (options.horizon <= 0) throw std::invalid_argument("horizon must be positive");
  validate(options.dynamics);

  WorldState world = WorldState::initial(task);
  const std::size_t n = world.drones.size();
  const double capture_radius = task.intrinsic.capture_radius;

  EpisodeOutcome out;
  EpisodeResult& result = out.result;
  result.task = task;
  result.seed = seed;
  result.capture_timestep = options.horizon;
  result.per_drone_return.assign(n, 0.0);

  auto score = [&](int step) {
    const std::vector<double> rewards = compute_reward(world, capture_radius, options.collision_radius);
    const bool captured = check_capture(world, capture_radius);
    for (std::size_t i = 0; i < n; ++i) result.per_drone_return[i] += rewards[i];
    if (captured) {
      result.capture_return += kCaptureBonus;
      if (!result.captured) {
        result.captured = true;
        result.capture_timestep = step;
      }
    }
    if (options.record_trajectory) out.trajectory.push_back(snapshot(world, step, rewards, captured));
    return std::pair{rewards, captured};
  };

  policy.begin_episode(world, seed);

  if (check_capture(world, capture_radius)) {
    const auto [rewards, captured] = score(0);
    const bool done = options.capture_ends_episode;
    policy.after_step(world, rewards, captured, done);
    if (done) return out;
  }

  const int delay = policy.command_delay_steps();
  std::deque<std::vector<DroneCommand>> pending;
  const std::vector<DroneCommand> hover(n, VelocityCommand{});

  for (int t = 0; t < options.horizon; ++t) {
    std::vector<DroneCommand> commands = policy.act(world);
    if (commands.size() != n) {
      throw PolicyError("policy returned " + std::to_string(commands.size()) +
                        " commands for " + std::to_string(n) + " drones");
    }
    if (delay > 0) {
      pending.push_back(std::move(commands));
      if (pending.size() > static_cast<std::size_t>(delay)) {
        commands = std::move(pending.front());
        pending.pop_front();
      } else {
        commands = hover;
      }
    }

    const EvaderState evader_next = step_evader(world, options.dynamics.dt, options.evader);
    for (std::size_t i = 0; i < n; ++i) {
      world.drones[i] = step_drone(world.drones[i], commands[i], options.dynamics, task.arena);
    }
    world.evader = evader_next;
    world.step_index = t + 1;

    const auto [rewards, captured] = score(t);
    const bool done = (captured && options.capture_ends_episode) || t + 1 == options.horizon;
    policy.after_step(world, rewards, captured, done);
    if (done) break;
  }
  return out;
}

Metrics aggregate_metrics(std::span<const EpisodeResult> results) {
  if (results.empty()) throw std::invalid_argument("cannot aggregate an empty result list");
  double captures = 0.0;
  double timesteps = 0.0;
  for (const EpisodeResult& r : results) {
    captures += r.captured ? 1.0 : 0.0;
    timesteps += r.capture_timestep;
  }
  const double count = static_cast<double>(results.size());
  return {captures / count, timesteps / count, results.size()};
}

namespace {

nlohmann::json vec(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

}  // namespace

void write_trajectory(std::ostream& out, std::span<const TrajectoryRecord> trajectory) {
  for (const TrajectoryRecord& r : trajectory) {
    nlohmann::json line;
    line["step"] = r.step;
    line["drone_positions"] = nlohmann::json::array();
    line["drone_velocities"] = nlohmann::json::array();
    for (const Vec3& p : r.drone_positions) line["drone_positions"].push_back(vec(p));
    for (const Vec3& v : r.drone_velocities) line["drone_velocities"].push_back(vec(v));
    line["evader_position"] = vec(r.evader_position);
    line["evader_velocity"] = vec(r.evader_velocity);
    line["rewards"] = r.rewards;
    line["captured"] = r.captured;
    out << line.dump() << '\n';
  }
}

std::string episode_result_json(const EpisodeResult& result) {
  nlohmann::json j;
  j["captured"] = result.captured;
  j["capture_timestep"] = result.capture_timestep;
  j["per_drone_return"] = result.per_drone_return;
  j["capture_return"] = result.capture_return;
  j["seed"] = result.seed;
  j["task"] = nlohmann::json::parse(save_scenario(result.task));
  return j.dump();
}

}  // namespace pursuit
