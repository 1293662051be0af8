#include "pursuit/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pursuit/parallel.hpp"

namespace pursuit {

ScenarioSource resolve_scenario(const std::string& name_or_path) {
  ScenarioSource source;
  source.name = name_or_path;
  if (name_or_path == "random") {
    source.randomize_obstacles = true;
    source.base.external = {};
    return source;
  }
  if (preset_document(name_or_path)) {
    source.base = load_preset(name_or_path);
  } else {
    std::ifstream in(name_or_path);
    if (!in) {
      throw std::invalid_argument("'" + name_or_path + "' is neither a preset nor a readable file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    source.base = load_scenario(buffer.str());
  }
  source.num_drones = source.base.external.drone_spawns.size();
  source.max_obstacles = std::max<std::size_t>(3, source.base.external.obstacles.size());
  return source;
}

FilterConfig filter_config_for(const ScenarioSource& source) {
  FilterConfig config;
  RandomizationConfig& r = config.randomization;
  r.arena = source.base.arena;
  r.num_drones = source.num_drones;
  r.max_obstacles = source.max_obstacles;
  r.obstacle_heights = source.obstacle_heights;
  r.obstacle_radius = source.obstacle_radius;
  if (!source.randomize_obstacles) r.fixed_obstacles = source.base.external.obstacles;
  return config;
}

TaskParams episode_task(const ScenarioSource& source, std::uint64_t episode_seed) {
  TaskParams task = source.base;
  if (source.randomize_spawns || source.randomize_obstacles) {
    Rng rng(episode_seed);
    task.external = task_filter_sample(rng, filter_config_for(source));
  }
  return task;
}

std::vector<EpisodeResult> evaluate(const EvaluationRequest& request) {
  validate(request.policy);
  std::vector<EpisodeResult> results(request.episodes);
  parallel_for(request.episodes, request.workers, [&](std::size_t k) {
    const std::uint64_t seed = request.seed + k;
    const TaskParams task = episode_task(request.scenario, seed);
    auto policy = make_policy(request.policy, request.options.dynamics.max_speed);
    results[k] = run_episode(task, *policy, seed, request.options).result;
  });
  return results;
}

namespace {

std::pair<double, double> mean_and_std(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return {mean, std::sqrt(var)};
}

}  // namespace

MetricsSummary evaluate_seeds(const EvaluationRequest& request, std::size_t seeds) {
  if (seeds == 0 || request.episodes == 0) {
    throw std::invalid_argument("need at least one seed group and one episode");
  }
  MetricsSummary summary;
  summary.scenario = request.scenario.name;
  summary.policy = policy_name(request.policy);
  summary.episodes_per_seed = request.episodes;

  std::vector<double> rates;
  std::vector<double> timesteps;
  for (std::size_t s = 0; s < seeds; ++s) {
    EvaluationRequest group = request;
    group.seed = request.seed + s * request.episodes;
    const std::vector<EpisodeResult> results = evaluate(group);
    const Metrics m = aggregate_metrics(results);
    summary.per_seed.push_back(m);
    rates.push_back(m.capture_rate);
    timesteps.push_back(m.mean_capture_timestep);
  }
  std::tie(summary.capture_rate_mean, summary.capture_rate_std) = mean_and_std(rates);
  std::tie(summary.capture_timestep_mean, summary.capture_timestep_std) = mean_and_std(timesteps);
  return summary;
}

SweepAxis parse_sweep_axis(const std::string& name) {
  if (name == "capture_radius") return SweepAxis::kCaptureRadius;
  if (name == "evader_speed") return SweepAxis::kEvaderSpeed;
  throw std::invalid_argument("unknown sweep axis '" + name + "'");
}

std::string sweep_axis_name(SweepAxis axis) {
  return axis == SweepAxis::kCaptureRadius ? "capture_radius" : "evader_speed";
}

std::vector<SweepRow> sweep(const EvaluationRequest& request, SweepAxis axis,
                            const std::vector<double>& values, std::size_t seeds) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  std::vector<SweepRow> rows;
  for (double value : values) {
    EvaluationRequest point = request;
    IntrinsicParams& intrinsic = point.scenario.base.intrinsic;
    (axis == SweepAxis::kCaptureRadius ? intrinsic.capture_radius : intrinsic.evader_speed) = value;
    validate(intrinsic, point.scenario.base.arena);
    rows.push_back({value, evaluate_seeds(point, seeds)});
  }
  return rows;
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_row(std::ostream& out, const MetricsSummary& s) {
  out << s.scenario << ',' << s.policy << ',' << fixed(s.capture_rate_mean) << ','
      << fixed(s.capture_timestep_mean) << ',' << fixed(s.capture_rate_std) << ','
      << fixed(s.capture_timestep_std) << ',' << s.episodes_per_seed << ',' << s.per_seed.size()
      << '\n';
}

constexpr const char* kMetricsHeader =
    "scenario,policy,capture_rate,capture_timestep_mean,capture_rate_std,capture_timestep_std,"
    "episodes,seeds";

}  // namespace

void write_metrics_table(std::ostream& out, const std::vector<MetricsSummary>& rows) {
  out << kMetricsHeader << '\n';
  for (const MetricsSummary& s : rows) write_row(out, s);
}

void write_sweep_table(std::ostream& out, SweepAxis axis, const std::vector<SweepRow>& rows) {
  out << "axis,value," << kMetricsHeader << '\n';
  for (const SweepRow& row : rows) {
    out << sweep_axis_name(axis) << ',' << fixed(row.value) << ',';
    write_row(out, row.summary);
  }
}

}  // namespace pursuit
