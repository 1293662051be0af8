#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pursuit/dynamics.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

// ---------------------------------------------------------------------------
// Observations

/// 10 self + 6 evader + 3(N-1) peers + 1 time + 6 per obstacle slot.
constexpr std::size_t observation_length(std::size_t num_drones, std::size_t max_obstacles) {
  return 10 + 6 + 3 * (num_drones - 1) + 1 + 6 * max_obstacles;
}

/// Flat observation of drone `drone_index`:
///   position(3) velocity(3) quaternion wxyz(4)
///   evader relative position(3) evader relative velocity(3)
///   other drones' relative positions, index order skipping self (3 each)
///   step_index / horizon (1)
///   max_obstacles slots of [relative base-center position(3), height, radius, valid]
/// Relative quantities are other minus self; unused obstacle slots are zero.
/// Throws std::invalid_argument if the index is out of range or the world has
/// more obstacles than slots.
std::vector<double> build_observation(const WorldState& world, std::size_t drone_index,
                                      std::size_t max_obstacles, int horizon);

// ---------------------------------------------------------------------------
// Configuration

struct AngelaniConfig {
  friend bool operator==(const AngelaniConfig&, const AngelaniConfig&) = default;
};

struct JanosovConfig {
  /// Upper bound on the lead time used to extrapolate the evader, seconds.
  double prediction_horizon = 0.3;
  /// Weight of the current velocity in the blended command, [0, 1].
  double inertia = 0.0;
  double peer_repulsion_gain = 0.01;
  double wall_repulsion_gain = 0.0;
  /// Commands take effect this many steps after they are issued.
  int command_delay_steps = 0;

  friend bool operator==(const JanosovConfig&, const JanosovConfig&) = default;
};

struct ApfConfig {
  double attract_gain = 1.0;
  double obstacle_repulsion_gain = 0.02;
  double obstacle_influence_radius = 0.2;
  double peer_repulsion_gain = 0.01;
  double peer_influence_radius = 0.3;

  friend bool operator==(const ApfConfig&, const ApfConfig&) = default;
};

/// Commands come from a bridge client.
struct ExternalConfig {
  std::string endpoint;

  friend bool operator==(const ExternalConfig&, const ExternalConfig&) = default;
};

/// Every drone commands zero velocity. Used as a null baseline.
struct ZeroConfig {
  friend bool operator==(const ZeroConfig&, const ZeroConfig&) = default;
};

using PolicyConfig = std::variant<AngelaniConfig, JanosovConfig, ApfConfig, ExternalConfig, ZeroConfig>;

/// Throws std::invalid_argument on negative gains, non-positive radii, or an
/// inertia outside [0, 1].
void validate(const PolicyConfig& config);

std::string policy_name(const PolicyConfig& config);

/// Default configuration of a policy family by name: "angelani" (alias
/// "pursuit"), "janosov", "apf", "zero". Throws std::invalid_argument otherwise.
PolicyConfig default_policy_config(std::string_view name);

/// Sets one named hyperparameter, e.g. ("inertia", 0.2) on a Janosov config.
/// Throws std::invalid_argument for keys the family does not have.
void set_policy_parameter(PolicyConfig& config, std::string_view key, double value);

// ---------------------------------------------------------------------------
// Heuristics

/// Straight-line pursuit at full speed; zero when coincident with the evader.
VelocityCommand angelani_action(const WorldState& world, std::size_t drone_index,
                                double max_speed);

/// Greedy chase of the extrapolated evader position with peer and wall
/// repulsion, blended with the current velocity, at full speed.
VelocityCommand janosov_action(const WorldState& world, std::size_t drone_index,
                               const JanosovConfig& config, double max_speed);

/// Attraction to the evader plus short-range repulsion from obstacles and peers.
VelocityCommand apf_action(const WorldState& world, std::size_t drone_index,
                           const ApfConfig& config, double max_speed);

// ---------------------------------------------------------------------------
// Policy objects

/// Produces one command per drone for the current world.
///
/// Heuristic policies are stateless; external policies own a connection and are
/// used by one episode at a time.
class Policy {
 public:
  virtual ~Policy() = default;

  /// Called once before the first step of an episode.
  virtual void begin_episode(const WorldState& /*world*/, std::uint64_t /*seed*/) {}
  virtual std::vector<DroneCommand> act(const WorldState& world) = 0;
  /// Called after every step with that step's per-drone rewards.
  virtual void after_step(const WorldState& /*world*/, std::span<const double> /*rewards*/,
                          bool /*captured*/, bool /*done*/) {}

  /// Commands issued at step t are applied at step t + delay; drones hover
  /// (zero velocity command) until the first delayed command arrives.
  virtual int command_delay_steps() const { return 0; }
};

/// Builds a heuristic policy. External configurations cannot be built here and
/// throw std::invalid_argument.
std::unique_ptr<Policy> make_policy(const PolicyConfig& config, double max_speed);

}  // namespace pursuit
