#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/curriculum.hpp"
#include "pursuit/episode.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/policies.hpp"
#include "pursuit/runner.hpp"

namespace pursuit {

inline constexpr int kProtocolVersion = 1;

/// A message violated the protocol. `path()` names the offending field.
class ProtocolError : public PolicyError {
 public:
  ProtocolError(std::string path, const std::string& what)
      : PolicyError(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Newline-delimited text over a pair of file descriptors (a socket, a pipe
/// pair, or stdin/stdout).
class LineChannel {
 public:
  enum class Status { kLine, kTimeout, kClosed };

  LineChannel(int read_fd, int write_fd, bool owns_fds);
  ~LineChannel();
  LineChannel(const LineChannel&) = delete;
  LineChannel& operator=(const LineChannel&) = delete;

  /// Waits up to `timeout` (negative = forever) for one line, without the '\n'.
  Status read_line(std::string& line, std::chrono::milliseconds timeout);
  /// Appends '\n'. Throws PolicyError when the peer is gone.
  void write_line(std::string_view line);

 private:
  int read_fd_;
  int write_fd_;
  bool owns_;
  std::string buffer_;
  bool eof_ = false;
};

struct BridgeConfig {
  std::size_t num_drones = 3;
  std::size_t max_obstacles = 3;
  EpisodeOptions options;
  std::chrono::milliseconds act_timeout{10000};
  /// How long to wait for a client's next request; negative waits forever.
  std::chrono::milliseconds idle_timeout{-1};
  /// Layout source for `reset` requests that name neither a task nor a scenario.
  std::string default_scenario = "random";
};

std::size_t observation_length(const BridgeConfig& config);

/// Per-drone commands decoded from an `act` message. A 3-element command is a
/// desired velocity; a 4-element command is [thrust, body rate x, y, z].
/// Throws ProtocolError with the field path on malformed input.
std::vector<DroneCommand> parse_act_message(std::string_view line, std::size_t num_drones);

/// Drone policy played by the client on the other end of `channel`. Each step
/// sends `obs`, waits for `act`, then sends `reward`. An episode captured at
/// spawn has no steps and sends nothing.
class BridgePolicy final : public Policy {
 public:
  BridgePolicy(LineChannel& channel, const BridgeConfig& config);

  std::vector<DroneCommand> act(const WorldState& world) override;
  void after_step(const WorldState& world, std::span<const double> rewards, bool captured,
                  bool done) override;

 private:
  LineChannel& channel_;
  const BridgeConfig& config_;
  bool awaiting_reward_ = false;
};

/// Trainer whose learner is the bridge client. Episodes run one at a time and
/// each starts by sending `reset{task, seed, mode}` to the client, where mode is
/// "train" or "eval".
class BridgeTrainer final : public Trainer {
 public:
  BridgeTrainer(LineChannel& channel, const BridgeConfig& config);

  void begin(const TrainerContext& context) override;
  std::vector<EpisodeResult> train_on(std::span<const TaskParams> tasks,
                                      std::span<const std::uint64_t> seeds) override;
  EpisodeResult evaluate_policy(const TaskParams& task, std::uint64_t seed) override;

 private:
  EpisodeResult play(const TaskParams& task, std::uint64_t seed, std::string_view mode);

  LineChannel& channel_;
  const BridgeConfig& config_;
};

/// Server side of the handshake: sends `hello` and checks the client's reply.
/// On a version mismatch sends `error` and returns false.
bool server_handshake(LineChannel& channel, const BridgeConfig& config);

enum class SessionEnd { kClientDone, kShutdownRequested, kDisconnected };

/// Serves one connected client: handshake, then `reset` (play an episode) and
/// `curriculum` (run the dual curriculum with the client as learner) requests
/// until `bye`, `shutdown`, or disconnect. A malformed message or a timed-out
/// `act` aborts only the current episode.
SessionEnd serve_session(LineChannel& channel, const BridgeConfig& config);

/// "stdio" serves one session on stdin/stdout; "tcp:PORT" listens on
/// 127.0.0.1 and serves clients one at a time until a client sends `shutdown`.
void serve(const std::string& endpoint, const BridgeConfig& config);

/// Listens on 127.0.0.1:port and returns a channel for the first client.
std::unique_ptr<LineChannel> accept_one_client(std::uint16_t port);

}  // namespace pursuit
