#include "pursuit/bridge.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pursuit {

using nlohmann::json;

namespace {

class ChannelClosed : public PolicyError {
 public:
  ChannelClosed() : PolicyError("bridge client disconnected") {}
};

class ActTimeout : public PolicyError {
 public:
  ActTimeout() : PolicyError("timed out waiting for act") {}
};

}  // namespace

// ---------------------------------------------------------------------------

LineChannel::LineChannel(int read_fd, int write_fd, bool owns_fds)
    : read_fd_(read_fd), write_fd_(write_fd), owns_(owns_fds) {}

LineChannel::~LineChannel() {
  if (!owns_) return;
  ::close(read_fd_);
  if (write_fd_ != read_fd_) ::close(write_fd_);
}

LineChannel::Status LineChannel::read_line(std::string& line, std::chrono::milliseconds timeout) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + timeout;
  while (true) {
    if (const auto pos = buffer_.find('\n'); pos != std::string::npos) {
      line.assign(buffer_, 0, pos);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      buffer_.erase(0, pos + 1);
      return Status::kLine;
    }
    if (eof_) return Status::kClosed;

    int wait_ms = -1;
    if (timeout.count() >= 0) {
      const auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
      if (left <= 0) return Status::kTimeout;
      wait_ms = static_cast<int>(left);
    }
    pollfd pfd{read_fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, wait_ms);
    if (ready < 0) {
      if (errno == EINTR) continue;
      eof_ = true;
      continue;
    }
    if (ready == 0) return Status::kTimeout;

    char chunk[4096];
    const ssize_t got = ::read(read_fd_, chunk, sizeof chunk);
    if (got < 0 && errno == EINTR) continue;
    if (got <= 0) {
      eof_ = true;
      continue;
    }
    buffer_.append(chunk, static_cast<std::size_t>(got));
  }
}

void LineChannel::write_line(std::string_view line) {
  std::string data(line);
  data.push_back('\n');
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::send(write_fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0 && errno == ENOTSOCK) n = ::write(write_fd_, data.data() + sent, data.size() - sent);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw ChannelClosed();
    sent += static_cast<std::size_t>(n);
  }
}

// ---------------------------------------------------------------------------

std::size_t observation_length(const BridgeConfig& config) {
  return observation_length(config.num_drones, config.max_obstacles);
}

namespace {

json parse_message(std::string_view line) {
  json j;
  try {
    j = json::parse(line.begin(), line.end());
  } catch (const json::parse_error& e) {
    throw ProtocolError("", std::string("malformed message: ") + e.what());
  }
  if (!j.is_object()) throw ProtocolError("", "message must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw ProtocolError("type", "missing message type");
  }
  return j;
}

void send(LineChannel& channel, const json& message) { channel.write_line(message.dump()); }

void send_error(LineChannel& channel, const std::string& message, const std::string& path = "") {
  json e{{"type", "error"}, {"message", message}};
  if (!path.empty()) e["path"] = path;
  send(channel, e);
}

std::string read_required(LineChannel& channel, std::chrono::milliseconds timeout) {
  std::string line;
  switch (channel.read_line(line, timeout)) {
    case LineChannel::Status::kLine:
      return line;
    case LineChannel::Status::kTimeout:
      throw ActTimeout();
    case LineChannel::Status::kClosed:
      break;
  }
  throw ChannelClosed();
}

json task_json(const TaskParams& task) { return json::parse(save_scenario(task)); }

}  // namespace

std::vector<DroneCommand> parse_act_message(std::string_view line, std::size_t num_drones) {
  const json j = parse_message(line);
  if (j["type"] != "act") {
    throw ProtocolError("type", "expected act, got " + j["type"].get<std::string>());
  }
  if (!j.contains("commands") || !j["commands"].is_array()) {
    throw ProtocolError("commands", "expected an array of per-drone commands");
  }
  const json& commands = j["commands"];
  if (commands.size() != num_drones) {
    throw ProtocolError("commands", "expected " + std::to_string(num_drones) + " commands, got " +
                                        std::to_string(commands.size()));
  }
  std::vector<DroneCommand> out;
  out.reserve(num_drones);
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string path = "commands[" + std::to_string(i) + "]";
    const json& c = commands[i];
    if (!c.is_array() || (c.size() != 3 && c.size() != 4)) {
      throw ProtocolError(path, "expected [vx, vy, vz] or [thrust, wx, wy, wz]");
    }
    double v[4] = {};
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_number()) {
        throw ProtocolError(path + "[" + std::to_string(k) + "]", "expected a number");
      }
      v[k] = c[k].get<double>();
      if (!std::isfinite(v[k])) {
        throw ProtocolError(path + "[" + std::to_string(k) + "]", "must be finite");
      }
    }
    if (c.size() == 3) {
      out.emplace_back(VelocityCommand{{v[0], v[1], v[2]}});
    } else {
      out.emplace_back(ThrustRateCommand{v[0], {v[1], v[2], v[3]}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BridgePolicy::BridgePolicy(LineChannel& channel, const BridgeConfig& config)
    : channel_(channel), config_(config) {}

std::vector<DroneCommand> BridgePolicy::act(const WorldState& world) {
  json obs{{"type", "obs"}, {"step", world.step_index}};
  json& per_drone = obs["observations"] = json::array();
  for (std::size_t i = 0; i < world.drones.size(); ++i) {
    per_drone.push_back(
        build_observation(world, i, config_.max_obstacles, config_.options.horizon));
  }
  send(channel_, obs);
  auto commands = parse_act_message(read_required(channel_, config_.act_timeout), world.drones.size());
  awaiting_reward_ = true;
  return commands;
}

void BridgePolicy::after_step(const WorldState& /*world*/, std::span<const double> rewards,
                              bool captured, bool done) {
  // A capture at spawn ends the episode before any obs was sent; the client
  // then sees reset followed directly by result.
  if (!awaiting_reward_) return;
  awaiting_reward_ = false;
  send(channel_, json{{"type", "reward"},
                      {"rewards", std::vector<double>(rewards.begin(), rewards.end())},
                      {"captured", captured},
                      {"done", done}});
}

BridgeTrainer::BridgeTrainer(LineChannel& channel, const BridgeConfig& config)
    : channel_(channel), config_(config) {}

void BridgeTrainer::begin(const TrainerContext& context) {
  send(channel_, json{{"type", "trainer"},
                      {"N", context.num_drones},
                      {"horizon", context.horizon},
                      {"discount", context.discount}});
}

EpisodeResult BridgeTrainer::play(const TaskParams& task, std::uint64_t seed,
                                  std::string_view mode) {
  send(channel_, json{{"type", "reset"}, {"task", task_json(task)}, {"seed", seed}, {"mode", mode}});
  BridgePolicy policy(channel_, config_);
  EpisodeResult result = run_episode(task, policy, seed, config_.options).result;
  send(channel_, json{{"type", "result"}, {"result", json::parse(episode_result_json(result))}});
  return result;
}

std::vector<EpisodeResult> BridgeTrainer::train_on(std::span<const TaskParams> tasks,
                                                   std::span<const std::uint64_t> seeds) {
  std::vector<EpisodeResult> out;
  out.reserve(tasks.size());
  for (std::size_t k = 0; k < tasks.size(); ++k) out.push_back(play(tasks[k], seeds[k], "train"));
  return out;
}

EpisodeResult BridgeTrainer::evaluate_policy(const TaskParams& task, std::uint64_t seed) {
  return play(task, seed, "eval");
}

// ---------------------------------------------------------------------------

bool server_handshake(LineChannel& channel, const BridgeConfig& config) {
  send(channel, json{{"type", "hello"},
                     {"protocol_version", kProtocolVersion},
                     {"N", config.num_drones},
                     {"N_o_max", config.max_obstacles},
                     {"obs_len", observation_length(config)},
                     {"horizon", config.options.horizon},
                     {"dt", config.options.dynamics.dt},
                     {"max_speed", config.options.dynamics.max_speed}});
  std::string line;
  if (channel.read_line(line, config.act_timeout) != LineChannel::Status::kLine) return false;
  try {
    const json j = parse_message(line);
    if (j["type"] != "hello") throw ProtocolError("type", "expected hello");
    if (!j.contains("protocol_version") || !j["protocol_version"].is_number_integer()) {
      throw ProtocolError("protocol_version", "missing protocol version");
    }
    if (j["protocol_version"].get<int>() != kProtocolVersion) {
      throw ProtocolError("protocol_version",
                          "unsupported version " + j["protocol_version"].dump() + ", server speaks " +
                              std::to_string(kProtocolVersion));
    }
  } catch (const ProtocolError& e) {
    send_error(channel, e.what(), e.path());
    return false;
  }
  return true;
}

namespace {

TaskParams task_from_reset(const json& request, std::uint64_t seed, const BridgeConfig& config) {
  TaskParams task;
  if (request.contains("task")) {
    try {
      task = load_scenario(request["task"].dump());
    } catch (const ValidationError& e) {
      throw ProtocolError("task" + (e.path().empty() ? "" : "." + e.path()), e.what());
    }
  } else {
    std::string name = config.default_scenario;
    if (request.contains("scenario")) {
      if (!request["scenario"].is_string()) throw ProtocolError("scenario", "expected a name");
      name = request["scenario"].get<std::string>();
    }
    ScenarioSource source;
    try {
      source = resolve_scenario(name);
    } catch (const std::exception& e) {
      throw ProtocolError("scenario", e.what());
    }
    source.num_drones = config.num_drones;
    source.max_obstacles = config.max_obstacles;
    source.randomize_spawns = true;
    task = episode_task(source, seed);
  }
  if (task.external.drone_spawns.size() != config.num_drones) {
    throw ProtocolError("task.drones", "expected " + std::to_string(config.num_drones) + " drones");
  }
  if (task.external.obstacles.size() > config.max_obstacles) {
    throw ProtocolError("task.obstacles", "more than " + std::to_string(config.max_obstacles) +
                                              " obstacles");
  }
  return task;
}

std::uint64_t seed_of(const json& request) {
  if (!request.contains("seed")) return 0;
  if (!request["seed"].is_number_unsigned() && !request["seed"].is_number_integer()) {
    throw ProtocolError("seed", "expected a non-negative integer");
  }
  if (request["seed"].is_number_integer() && request["seed"].get<std::int64_t>() < 0) {
    throw ProtocolError("seed", "expected a non-negative integer");
  }
  return request["seed"].get<std::uint64_t>();
}

void run_client_episode(LineChannel& channel, const json& request, const BridgeConfig& config) {
  const std::uint64_t seed = seed_of(request);
  const TaskParams task = task_from_reset(request, seed, config);
  BridgePolicy policy(channel, config);
  const EpisodeResult result = run_episode(task, policy, seed, config.options).result;
  send(channel, json{{"type", "result"}, {"result", json::parse(episode_result_json(result))}});
}

void run_client_curriculum(LineChannel& channel, const json& request, const BridgeConfig& config) {
  CurriculumConfig cc;
  try {
    cc = parse_curriculum_config(request.contains("config") ? request["config"].dump() : "{}");
  } catch (const std::exception& e) {
    throw ProtocolError("config", e.what());
  }
  if (cc.filter.randomization.num_drones != config.num_drones) {
    throw ProtocolError("config.num_drones",
                        "must match the session's " + std::to_string(config.num_drones) + " drones");
  }
  cc.filter.randomization.max_obstacles =
      std::min(cc.filter.randomization.max_obstacles, config.max_obstacles);
  BridgeConfig episode_config = config;
  episode_config.options.horizon = cc.horizon;

  Rng rng(seed_of(request));
  BridgeTrainer trainer(channel, episode_config);
  const CurriculumReport report = run_dual_curriculum(trainer, cc, rng);

  std::stringstream lines;
  write_curriculum_report(lines, report);
  json out{{"type", "report"}, {"records", json::array()}};
  for (std::string line; std::getline(lines, line);) out["records"].push_back(json::parse(line));
  send(channel, out);
}

}  // namespace

SessionEnd serve_session(LineChannel& channel, const BridgeConfig& config) {
  try {
    if (!server_handshake(channel, config)) return SessionEnd::kDisconnected;

    while (true) {
      std::string line;
      const auto status = channel.read_line(line, config.idle_timeout);
      if (status == LineChannel::Status::kClosed) return SessionEnd::kDisconnected;
      if (status == LineChannel::Status::kTimeout) {
        send_error(channel, "idle timeout");
        return SessionEnd::kDisconnected;
      }
      try {
        const json request = parse_message(line);
        const std::string type = request["type"].get<std::string>();
        if (type == "reset") {
          run_client_episode(channel, request, config);
        } else if (type == "curriculum") {
          run_client_curriculum(channel, request, config);
        } else if (type == "bye") {
          return SessionEnd::kClientDone;
        } else if (type == "shutdown") {
          return SessionEnd::kShutdownRequested;
        } else {
          throw ProtocolError("type", "unexpected message type '" + type + "'");
        }
      } catch (const ChannelClosed&) {
        throw;
      } catch (const ProtocolError& e) {
        send_error(channel, e.what(), e.path());
      } catch (const PolicyError& e) {
        send_error(channel, e.what());
      } catch (const std::exception& e) {
        send_error(channel, e.what());
      }
    }
  } catch (const ChannelClosed&) {
    return SessionEnd::kDisconnected;
  }
}

// ---------------------------------------------------------------------------

namespace {

class TcpListener {
 public:
  explicit TcpListener(std::uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) throw std::runtime_error(std::string("socket: ") + std::strerror(errno));
    const int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
        ::listen(fd_, 1) != 0) {
      const std::string why = std::strerror(errno);
      ::close(fd_);
      throw std::runtime_error("cannot listen on 127.0.0.1:" + std::to_string(port) + ": " + why);
    }
  }
  ~TcpListener() { ::close(fd_); }
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::unique_ptr<LineChannel> accept() {
    while (true) {
      const int client = ::accept(fd_, nullptr, nullptr);
      if (client >= 0) return std::make_unique<LineChannel>(client, client, true);
      if (errno != EINTR) throw std::runtime_error(std::string("accept: ") + std::strerror(errno));
    }
  }

 private:
  int fd_ = -1;
};

std::uint16_t parse_port(const std::string& endpoint) {
  const std::string digits = endpoint.substr(4);
  std::size_t used = 0;
  unsigned long port = 0;
  try {
    port = std::stoul(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != digits.size() || port == 0 || port > 65535) {
    throw std::invalid_argument("bad endpoint '" + endpoint + "', expected tcp:PORT");
  }
  return static_cast<std::uint16_t>(port);
}

}  // namespace

std::unique_ptr<LineChannel> accept_one_client(std::uint16_t port) {
  TcpListener listener(port);
  return listener.accept();
}

void serve(const std::string& endpoint, const BridgeConfig& config) {
  std::signal(SIGPIPE, SIG_IGN);
  if (endpoint == "stdio") {
    LineChannel channel(STDIN_FILENO, STDOUT_FILENO, false);
    serve_session(channel, config);
    return;
  }
  if (endpoint.rfind("tcp:", 0) != 0) {
    throw std::invalid_argument("bad endpoint '" + endpoint + "', expected stdio or tcp:PORT");
  }
  TcpListener listener(parse_port(endpoint));
  while (true) {
    auto channel = listener.accept();
    if (serve_session(*channel, config) == SessionEnd::kShutdownRequested) return;
  }
}

}  // namespace pursuit
