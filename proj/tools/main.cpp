// Command-line front end: batch evaluation, sweeps, curriculum runs, the task
// filter, grid search, and the bridge server.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pursuit/bridge.hpp"
#include "pursuit/curriculum.hpp"
#include "pursuit/episode.hpp"
#include "pursuit/feasibility.hpp"
#include "pursuit/grid_search.hpp"
#include "pursuit/runner.hpp"

namespace {

using namespace pursuit;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PURSUIT_LOG=quiet|info|debug, default info. Log lines carry no timestamps so
// reruns produce identical logs.
enum class LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("PURSUIT_LOG");
    if (env == nullptr) return LogLevel::kInfo;
    const std::string v = env;
    if (v == "quiet" || v == "0") return LogLevel::kQuiet;
    if (v == "debug" || v == "2") return LogLevel::kDebug;
    return LogLevel::kInfo;
  }();
  return level;
}

template <typename... Args>
void log(LogLevel level, const char* fmt, Args... args) {
  if (static_cast<int>(log_level()) < static_cast<int>(level)) return;
  std::fprintf(stderr, "[pursuit] ");
  std::fprintf(stderr, fmt, args...);
  std::fputc('\n', stderr);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty value list");
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + text + "'");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to the named file, or to stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// Flags shared by the evaluation verbs.
struct EvalFlags {
  std::string scenario = "empty";
  std::string policy = "angelani";
  std::vector<std::string> params;
  std::size_t episodes = 1000;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  unsigned workers = 0;
  std::optional<double> capture_radius;
  std::optional<double> evader_speed;
  std::optional<double> max_speed;
  std::optional<double> velocity_time_constant;
  int horizon = 800;
  bool fixed_spawns = false;
  std::string out;
};

void add_eval_flags(CLI::App& cmd, EvalFlags& f) {
  cmd.add_option("--scenario", f.scenario, "Preset name, scenario file, or 'random'")
      ->capture_default_str();
  cmd.add_option("--policy", f.policy, "angelani (pursuit), janosov, apf, zero")
      ->capture_default_str();
  cmd.add_option("--param", f.params, "Policy hyperparameter override key=value (repeatable)");
  cmd.add_option("--episodes", f.episodes, "Episodes per seed group")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", f.seed, "Base seed; episode k uses seed + k")->capture_default_str();
  cmd.add_option("--seeds", f.seeds, "Independent seed groups (mean and std across groups)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--workers", f.workers, "Worker threads (0 = all cores)")->capture_default_str();
  cmd.add_option("--capture-radius", f.capture_radius, "Override the scenario capture radius");
  cmd.add_option("--evader-speed", f.evader_speed, "Override the scenario evader speed");
  cmd.add_option("--max-speed", f.max_speed, "Drone speed limit");
  cmd.add_option("--tau-v", f.velocity_time_constant, "Velocity tracking time constant (s)");
  cmd.add_option("--horizon", f.horizon, "Episode length in steps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--fixed-spawns", f.fixed_spawns, "Use the scenario's spawn points as written");
  cmd.add_option("--out", f.out, "Output file (default stdout)");
}

PolicyConfig build_policy(const std::string& name, const std::vector<std::string>& params) {
  PolicyConfig config;
  try {
    config = default_policy_config(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const std::string& p : params) {
    const auto [key, value] = split_assignment(p);
    const auto numbers = parse_number_list(value);
    if (numbers.size() != 1) throw UsageError("--param expects one value: " + p);
    try {
      set_policy_parameter(config, key, numbers.front());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  validate(config);
  return config;
}

ScenarioSource build_scenario(const std::string& name, const EvalFlags& f) {
  ScenarioSource source;
  try {
    source = resolve_scenario(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f.capture_radius) source.base.intrinsic.capture_radius = *f.capture_radius;
  if (f.evader_speed) source.base.intrinsic.evader_speed = *f.evader_speed;
  if (f.fixed_spawns) {
    if (source.base.external.drone_spawns.empty()) {
      throw UsageError("scenario '" + name + "' has no spawn points to keep fixed");
    }
    source.randomize_spawns = false;
  }
  validate(source.base.intrinsic, source.base.arena);
  return source;
}

EpisodeOptions build_options(const EvalFlags& f) {
  EpisodeOptions options;
  options.horizon = f.horizon;
  if (f.max_speed) options.dynamics.max_speed = *f.max_speed;
  if (f.velocity_time_constant) options.dynamics.velocity_time_constant = *f.velocity_time_constant;
  validate(options.dynamics);
  return options;
}

EvaluationRequest build_request(const EvalFlags& f) {
  EvaluationRequest request;
  request.scenario = build_scenario(f.scenario, f);
  request.policy = build_policy(f.policy, f.params);
  request.episodes = f.episodes;
  request.seed = f.seed;
  request.workers = f.workers;
  request.options = build_options(f);
  return request;
}

// ---------------------------------------------------------------------------

struct SimFlags {
  EvalFlags eval;
  std::string trajectory;
  std::string results;
};

void run_sim(const SimFlags& flags) {
  const EvaluationRequest request = build_request(flags.eval);
  log(LogLevel::kInfo, "sim scenario=%s policy=%s episodes=%zu seeds=%zu seed=%llu",
      request.scenario.name.c_str(), policy_name(request.policy).c_str(), request.episodes,
      flags.eval.seeds, static_cast<unsigned long long>(request.seed));

  if (!flags.results.empty()) {
    // Per-episode records for every seed group, in episode-seed order.
    Output out(flags.results);
    for (std::size_t s = 0; s < flags.eval.seeds; ++s) {
      EvaluationRequest group = request;
      group.seed = request.seed + s * request.episodes;
      for (const EpisodeResult& r : evaluate(group)) out.stream() << episode_result_json(r) << '\n';
    }
  }

  const MetricsSummary summary = evaluate_seeds(request, flags.eval.seeds);
  for (std::size_t s = 0; s < summary.per_seed.size(); ++s) {
    log(LogLevel::kDebug, "seed group %zu: capture_rate=%.6f capture_timestep=%.6f", s,
        summary.per_seed[s].capture_rate, summary.per_seed[s].mean_capture_timestep);
  }
  Output out(flags.eval.out);
  write_metrics_table(out.stream(), {summary});

  if (!flags.trajectory.empty()) {
    // Trajectory of the first episode of the first seed group.
    const TaskParams task = episode_task(request.scenario, request.seed);
    EpisodeOptions options = request.options;
    options.record_trajectory = true;
    auto policy = make_policy(request.policy, options.dynamics.max_speed);
    const EpisodeOutcome outcome = run_episode(task, *policy, request.seed, options);
    Output traj(flags.trajectory);
    write_trajectory(traj.stream(), outcome.trajectory);
  }
}

struct SweepFlags {
  EvalFlags eval;
  std::string axis;
  std::string values;
};

void run_sweep(const SweepFlags& flags) {
  const EvaluationRequest request = build_request(flags.eval);
  SweepAxis axis{};
  try {
    axis = parse_sweep_axis(flags.axis);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::vector<double> values = parse_number_list(flags.values);
  log(LogLevel::kInfo, "sweep scenario=%s policy=%s axis=%s values=%zu",
      request.scenario.name.c_str(), policy_name(request.policy).c_str(),
      sweep_axis_name(axis).c_str(), values.size());
  const auto rows = sweep(request, axis, values, flags.eval.seeds);
  Output out(flags.eval.out);
  write_sweep_table(out.stream(), axis, rows);
}

struct CurriculumFlags {
  std::string config;
  std::string trainer = "angelani";
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::optional<double> max_speed;
  std::optional<std::size_t> eval_episodes;
  std::optional<std::size_t> max_iterations;
  bool no_intrinsic = false;
  bool no_external = false;
  std::string out;
};

std::uint16_t parse_tcp_port(const std::string& endpoint) {
  const std::string prefix = "tcp:";
  if (endpoint.rfind(prefix, 0) != 0) throw UsageError("expected tcp:PORT, got '" + endpoint + "'");
  const std::string digits = endpoint.substr(prefix.size());
  std::size_t used = 0;
  unsigned long port = 0;
  try {
    port = std::stoul(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != digits.size() || digits.empty() || port > 65535) {
    throw UsageError("bad port in '" + endpoint + "'");
  }
  return static_cast<std::uint16_t>(port);
}

void run_curriculum(const CurriculumFlags& flags) {
  CurriculumConfig config;
  if (!flags.config.empty()) {
    try {
      config = parse_curriculum_config(read_file(flags.config));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (flags.eval_episodes) config.eval_episodes = *flags.eval_episodes;
  if (flags.max_iterations) config.max_iterations = *flags.max_iterations;
  if (flags.no_intrinsic) config.intrinsic_enabled = false;
  if (flags.no_external) config.external_enabled = false;
  validate(config);

  EpisodeOptions options;
  options.horizon = config.horizon;
  options.max_obstacles = config.filter.randomization.max_obstacles;
  if (flags.max_speed) options.dynamics.max_speed = *flags.max_speed;
  validate(options.dynamics);

  std::unique_ptr<Trainer> trainer;
  std::unique_ptr<LineChannel> channel;
  BridgeConfig bridge;
  if (flags.trainer == "never") {
    trainer = std::make_unique<NeverCaptureTrainer>(config.horizon);
  } else if (flags.trainer.rfind("tcp:", 0) == 0) {
    const std::uint16_t port = parse_tcp_port(flags.trainer);
    bridge.num_drones = config.filter.randomization.num_drones;
    bridge.max_obstacles = config.filter.randomization.max_obstacles;
    bridge.options = options;
    log(LogLevel::kInfo, "waiting for a trainer on 127.0.0.1:%u", static_cast<unsigned>(port));
    channel = accept_one_client(port);
    if (!server_handshake(*channel, bridge)) throw std::runtime_error("trainer handshake failed");
    trainer = std::make_unique<BridgeTrainer>(*channel, bridge);
  } else {
    trainer = std::make_unique<ScriptedTrainer>(build_policy(flags.trainer, flags.params), options,
                                                flags.workers);
  }

  log(LogLevel::kInfo, "curriculum trainer=%s seed=%llu eval_episodes=%zu", flags.trainer.c_str(),
      static_cast<unsigned long long>(flags.seed), config.eval_episodes);
  Rng rng(flags.seed);
  const CurriculumReport report = run_dual_curriculum(*trainer, config, rng);
  for (const IterationRecord& r : report.iterations) {
    log(LogLevel::kDebug, "iteration %zu phase %zu eval %.4f archive %zu", r.iteration, r.phase,
        r.eval_capture_rate, r.archive_size_after);
  }
  log(LogLevel::kInfo, "finished: phase %zu of %zu after %zu iterations (%s)", report.final_phase,
      report.phases.size(), report.iterations.size(), report.completed ? "completed" : "incomplete");
  Output out(flags.out);
  write_curriculum_report(out.stream(), report);
}

struct FilterFlags {
  std::string check;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  std::size_t num_drones = 3;
  std::size_t max_obstacles = 3;
  std::string out;
};

int run_filter(const FilterFlags& flags) {
  Output out(flags.out);
  if (!flags.check.empty()) {
    TaskParams task;
    if (const auto doc = preset_document(flags.check)) {
      task = load_scenario(*doc);
    } else {
      task = load_scenario(read_file(flags.check));
    }
    if (task.external.drone_spawns.empty()) {
      throw UsageError("scenario '" + flags.check + "' has no spawn points to check");
    }
    const OccupancyGrid grid = rasterize(task.external, task.arena);
    const bool ok = is_feasible(task.external, task.arena);
    out.stream() << (ok ? "feasible" : "infeasible") << '\n' << grid.render();
    return 0;
  }
  if (flags.sample == 0) throw UsageError("filter needs --check or --sample");

  FilterConfig config;
  config.randomization.num_drones = flags.num_drones;
  config.randomization.max_obstacles = flags.max_obstacles;
  for (std::size_t k = 0; k < flags.sample; ++k) {
    Rng rng(flags.seed + k);
    TaskParams task;
    task.external = task_filter_sample(rng, config);
    task.arena = config.randomization.arena;
    // One document per line.
    out.stream() << nlohmann::json::parse(save_scenario(task)).dump() << '\n';
  }
  return 0;
}


struct GridFlags {
  std::string policy = "apf";
  std::vector<std::string> grid;
  std::string scenarios = "empty";
  std::size_t episodes = 100;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::optional<double> capture_radius;
  std::optional<double> evader_speed;
  int horizon = 800;
  std::string out;
};

void run_gridsearch(const GridFlags& flags) {
  const PolicyConfig base = build_policy(flags.policy, {});
  std::vector<GridAxis> axes;
  for (const std::string& g : flags.grid) {
    const auto [key, values] = split_assignment(g);
    axes.push_back({key, parse_number_list(values)});
  }
  std::vector<PolicyConfig> cells;
  try {
    cells = expand_grid(base, axes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  EvalFlags eval;
  eval.capture_radius = flags.capture_radius;
  eval.evader_speed = flags.evader_speed;
  std::vector<ScenarioSource> scenarios;
  for (const std::string& name : split(flags.scenarios, ',')) {
    scenarios.push_back(build_scenario(name, eval));
  }
  EpisodeOptions options;
  options.horizon = flags.horizon;

  log(LogLevel::kInfo, "gridsearch policy=%s cells=%zu scenarios=%zu episodes=%zu",
      flags.policy.c_str(), cells.size(), scenarios.size(), flags.episodes);
  const GridSearchResult result =
      grid_search(cells, scenarios, flags.episodes, flags.seed, options, flags.workers);

  Output out(flags.out);
  std::ostream& os = out.stream();
  os << "cell";
  for (const GridAxis& a : axes) os << ',' << a.parameter;
  os << ",capture_rate,capture_timestep_mean,best\n";
  // Parameter values are re-derived from the cell index (last axis fastest).
  for (std::size_t i = 0; i < result.table.size(); ++i) {
    os << i;
    std::size_t rest = i;
    std::vector<double> coords(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      coords[a] = axes[a].values[rest % axes[a].values.size()];
      rest /= axes[a].values.size();
    }
    char buf[64];
    for (double c : coords) {
      std::snprintf(buf, sizeof buf, ",%.6g", c);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f,", result.table[i].capture_rate,
                  result.table[i].mean_capture_timestep);
    os << buf << (i == result.best_index ? 1 : 0) << '\n';
  }
}

struct ServeFlags {
  std::string endpoint = "stdio";
  std::size_t num_drones = 3;
  std::size_t max_obstacles = 3;
  int horizon = 800;
  int act_timeout_ms = 10000;
  std::string scenario = "random";
  std::optional<double> max_speed;
};

void run_serve(const ServeFlags& flags) {
  BridgeConfig config;
  config.num_drones = flags.num_drones;
  config.max_obstacles = flags.max_obstacles;
  config.options.horizon = flags.horizon;
  config.options.max_obstacles = flags.max_obstacles;
  if (flags.max_speed) config.options.dynamics.max_speed = *flags.max_speed;
  validate(config.options.dynamics);
  config.act_timeout = std::chrono::milliseconds(flags.act_timeout_ms);
  config.default_scenario = flags.scenario;
  if (flags.endpoint != "stdio") parse_tcp_port(flags.endpoint);
  log(LogLevel::kInfo, "serving on %s", flags.endpoint.c_str());
  serve(flags.endpoint, config);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-drone pursuit-evasion engine"};
  app.require_subcommand(1);

  SimFlags sim;
  auto* sim_cmd = app.add_subcommand("sim", "Evaluate a policy on a batch of episodes");
  add_eval_flags(*sim_cmd, sim.eval);
  sim_cmd->add_option("--trajectory", sim.trajectory, "Write the first episode's trajectory (JSONL)");
  sim_cmd->add_option("--results", sim.results, "Write every episode result (JSONL)");

  SweepFlags sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate over a range of one task parameter");
  add_eval_flags(*sweep_cmd, sw.eval);
  sweep_cmd->add_option("--axis", sw.axis, "capture_radius or evader_speed")->required();
  sweep_cmd->add_option("--values", sw.values, "Comma-separated axis values")->required();

  CurriculumFlags cur;
  auto* cur_cmd = app.add_subcommand("curriculum", "Run the dual curriculum with a trainer");
  cur_cmd->add_option("--config", cur.config, "Curriculum configuration (JSON)");
  cur_cmd->add_option("--trainer", cur.trainer,
                      "Scripted policy (angelani, janosov, apf, zero), 'never', or tcp:PORT")
      ->capture_default_str();
  cur_cmd->add_option("--param", cur.params, "Scripted policy override key=value");
  cur_cmd->add_option("--seed", cur.seed, "Curriculum seed")->capture_default_str();
  cur_cmd->add_option("--workers", cur.workers, "Worker threads (0 = all cores)");
  cur_cmd->add_option("--max-speed", cur.max_speed, "Drone speed limit for scripted trainers");
  cur_cmd->add_option("--eval-episodes", cur.eval_episodes, "Override eval_episodes");
  cur_cmd->add_option("--max-iterations", cur.max_iterations, "Override max_iterations");
  cur_cmd->add_flag("--no-intrinsic", cur.no_intrinsic, "Train at the target parameters throughout");
  cur_cmd->add_flag("--no-external", cur.no_external, "Never replay archived layouts");
  cur_cmd->add_option("--out", cur.out, "Report file (default stdout)");

  FilterFlags filt;
  auto* filter_cmd = app.add_subcommand("filter", "Check or sample feasible layouts");
  filter_cmd->add_option("--check", filt.check, "Scenario preset or file to check");
  filter_cmd->add_option("--sample", filt.sample, "Number of feasible layouts to draw");
  filter_cmd->add_option("--seed", filt.seed, "Seed of the first sample")->capture_default_str();
  filter_cmd->add_option("--drones", filt.num_drones, "Drones per layout")->capture_default_str();
  filter_cmd->add_option("--max-obstacles", filt.max_obstacles, "Obstacle count upper bound")
      ->capture_default_str();
  filter_cmd->add_option("--out", filt.out, "Output file (default stdout)");

  GridFlags grid;
  auto* grid_cmd = app.add_subcommand("gridsearch", "Grid-search heuristic hyperparameters");
  grid_cmd->add_option("--policy", grid.policy, "Policy family")->capture_default_str();
  grid_cmd->add_option("--grid", grid.grid, "Axis key=v1,v2,... (repeatable)");
  grid_cmd->add_option("--scenario", grid.scenarios, "Comma-separated scenarios")
      ->capture_default_str();
  grid_cmd->add_option("--episodes", grid.episodes, "Episodes per scenario and cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  grid_cmd->add_option("--seed", grid.seed, "Base seed")->capture_default_str();
  grid_cmd->add_option("--workers", grid.workers, "Worker threads (0 = all cores)");
  grid_cmd->add_option("--capture-radius", grid.capture_radius, "Override the capture radius");
  grid_cmd->add_option("--evader-speed", grid.evader_speed, "Override the evader speed");
  grid_cmd->add_option("--horizon", grid.horizon, "Episode length in steps")->capture_default_str();
  grid_cmd->add_option("--out", grid.out, "Output file (default stdout)");

  ServeFlags srv;
  auto* serve_cmd = app.add_subcommand("serve", "Let an external process drive the drones");
  serve_cmd->add_option("--endpoint", srv.endpoint, "stdio or tcp:PORT")->capture_default_str();
  serve_cmd->add_option("--drones", srv.num_drones, "Drones per episode")->capture_default_str();
  serve_cmd->add_option("--max-obstacles", srv.max_obstacles, "Observation obstacle slots")
      ->capture_default_str();
  serve_cmd->add_option("--horizon", srv.horizon, "Episode length in steps")->capture_default_str();
  serve_cmd->add_option("--act-timeout-ms", srv.act_timeout_ms, "Deadline for each act message")
      ->capture_default_str();
  serve_cmd->add_option("--scenario", srv.scenario, "Layout source for bare reset requests")
      ->capture_default_str();
  serve_cmd->add_option("--max-speed", srv.max_speed, "Drone speed limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*sim_cmd) run_sim(sim);
    if (*sweep_cmd) run_sweep(sw);
    if (*cur_cmd) run_curriculum(cur);
    if (*filter_cmd) return run_filter(filt);
    if (*grid_cmd) run_gridsearch(grid);
    if (*serve_cmd) run_serve(srv);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "pursuit: %s\n", e.what());
    return kUsageError;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "pursuit: invalid input: %s\n", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "pursuit: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pursuit: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
