#include "pursuit/curriculum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pursuit/parallel.hpp"

namespace pursuit {

bool PhaseSequence::advance() {
  if (at_final_phase()) return false;
  ++current;
  return true;
}

PhaseSequence get_order(double dc_init, double ve_init, double dc_target, double ve_target,
                        int parts) {
  if (parts < 1) throw std::invalid_argument("parts must be at least 1");
  if (!(dc_target > 0.0) || dc_init < dc_target) {
    throw std::invalid_argument("capture radius must shrink toward a positive target");
  }
  if (!(ve_init >= 0.0) || ve_target < ve_init) {
    throw std::invalid_argument("evader speed must grow from a non-negative start");
  }

  PhaseSequence seq;
  seq.phases.push_back({dc_init, ve_init});
  // Endpoints are assigned, not accumulated, so the last phase is the exact target.
  if (ve_target > ve_init) {
    for (int k = 1; k <= parts; ++k) {
      const double ve = k == parts ? ve_target : ve_init + (ve_target - ve_init) * k / parts;
      seq.phases.push_back({dc_init, ve});
    }
  }
  if (dc_target < dc_init) {
    for (int k = 1; k <= parts; ++k) {
      const double dc = k == parts ? dc_target : dc_init + (dc_target - dc_init) * k / parts;
      seq.phases.push_back({dc, ve_target});
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------

ActiveArchive::ActiveArchive(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("archive capacity must be positive");
  items_.reserve(std::min<std::size_t>(capacity, 4096));
}

void ActiveArchive::add(ExternalParams external, Rng& rng) {
  if (items_.size() >= capacity_) {
    const std::size_t victim = rng.uniform_index(items_.size());
    items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  items_.push_back(std::move(external));
}

const ExternalParams& ActiveArchive::sample(Rng& rng) const {
  if (items_.empty()) throw std::logic_error("sampling from an empty archive");
  return items_[rng.uniform_index(items_.size())];
}

void update_active_archive(ActiveArchive& archive, std::span<const EpisodeResult> batch, Rng& rng) {
  for (const EpisodeResult& r : batch) {
    if (r.capture_return == 0.0) archive.add(r.task.external, rng);
  }
}

ValidSampler make_valid_sampler(FilterConfig config) {
  return [config = std::move(config)](Rng& rng) { return task_filter_sample(rng, config); };
}

SelectedExternal select_external(const ActiveArchive& archive, const ValidSampler& valid,
                                 double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (!archive.empty() && p > 0.0 && rng.bernoulli(p)) return {archive.sample(rng), true};
  return {valid(rng), false};
}

// ---------------------------------------------------------------------------

std::vector<EpisodeResult> Trainer::evaluate_batch(std::span<const TaskParams> tasks,
                                                   std::span<const std::uint64_t> seeds) {
  std::vector<EpisodeResult> out;
  out.reserve(tasks.size());
  for (std::size_t k = 0; k < tasks.size(); ++k) out.push_back(evaluate_policy(tasks[k], seeds[k]));
  return out;
}

ScriptedTrainer::ScriptedTrainer(PolicyConfig policy, EpisodeOptions options, unsigned workers)
    : policy_(std::move(policy)), options_(std::move(options)), workers_(workers) {
  validate(policy_);
}

std::vector<EpisodeResult> ScriptedTrainer::train_on(std::span<const TaskParams> tasks,
                                                     std::span<const std::uint64_t> seeds) {
  return evaluate_batch(tasks, seeds);
}

EpisodeResult ScriptedTrainer::evaluate_policy(const TaskParams& task, std::uint64_t seed) {
  auto policy = make_policy(policy_, options_.dynamics.max_speed);
  return run_episode(task, *policy, seed, options_).result;
}

std::vector<EpisodeResult> ScriptedTrainer::evaluate_batch(std::span<const TaskParams> tasks,
                                                           std::span<const std::uint64_t> seeds) {
  if (tasks.size() != seeds.size()) throw std::invalid_argument("one seed per task required");
  std::vector<EpisodeResult> out(tasks.size());
  parallel_for(tasks.size(), workers_,
               [&](std::size_t k) { out[k] = evaluate_policy(tasks[k], seeds[k]); });
  return out;
}

std::vector<EpisodeResult> NeverCaptureTrainer::train_on(std::span<const TaskParams> tasks,
                                                         std::span<const std::uint64_t> seeds) {
  return evaluate_batch(tasks, seeds);
}

EpisodeResult NeverCaptureTrainer::evaluate_policy(const TaskParams& task, std::uint64_t seed) {
  EpisodeResult r;
  r.captured = false;
  r.capture_timestep = horizon_;
  r.per_drone_return.assign(task.external.drone_spawns.size(), 0.0);
  r.task = task;
  r.seed = seed;
  return r;
}

// ---------------------------------------------------------------------------

PhaseEvaluation evaluate_phase(Trainer& trainer, const IntrinsicParams& intrinsic,
                               const ArenaSpec& arena, std::size_t episodes, double threshold,
                               const ValidSampler& valid, Rng& rng) {
  if (episodes == 0) throw std::invalid_argument("evaluation needs at least one episode");
  std::vector<TaskParams> tasks;
  std::vector<std::uint64_t> seeds;
  tasks.reserve(episodes);
  seeds.reserve(episodes);
  for (std::size_t k = 0; k < episodes; ++k) {
    tasks.push_back({intrinsic, valid(rng), arena});
    seeds.push_back(rng.next_u64());
  }
  const std::vector<EpisodeResult> results = trainer.evaluate_batch(tasks, seeds);
  std::size_t captured = 0;
  for (const EpisodeResult& r : results) captured += r.capture_return > 0.0 ? 1 : 0;
  PhaseEvaluation e;
  e.capture_rate = static_cast<double>(captured) / static_cast<double>(episodes);
  e.passed = e.capture_rate >= threshold;
  return e;
}

void validate(const CurriculumConfig& c) {
  if (c.batch_size == 0) throw std::invalid_argument("batch_size must be positive");
  if (!(c.archive_probability >= 0.0 && c.archive_probability <= 1.0)) {
    throw std::invalid_argument("archive_probability must lie in [0, 1]");
  }
  if (!(c.success_threshold > 0.0 && c.success_threshold <= 1.0)) {
    throw std::invalid_argument("success_threshold must lie in (0, 1]");
  }
  if (c.eval_episodes == 0) throw std::invalid_argument("eval_episodes must be positive");
  if (c.archive_capacity == 0) throw std::invalid_argument("archive_capacity must be positive");
  if (c.max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  if (c.horizon <= 0) throw std::invalid_argument("horizon must be positive");
  validate(c.filter.randomization.arena);
  validate(c.target, c.filter.randomization.arena);
}

CurriculumReport run_dual_curriculum(Trainer& trainer, const CurriculumConfig& config, Rng& rng) {
  validate(config);
  const ArenaSpec& arena = config.filter.randomization.arena;
  const double dc_init =
      config.initial_capture_radius > 0.0 ? config.initial_capture_radius : arena.radius;

  PhaseSequence sequence;
  if (config.intrinsic_enabled) {
    sequence = get_order(dc_init, config.initial_evader_speed, config.target.capture_radius,
                         config.target.evader_speed, config.parts);
  } else {
    sequence.phases = {config.target};
  }
  const double p = config.external_enabled ? config.archive_probability : 0.0;

  const ValidSampler valid = make_valid_sampler(config.filter);
  ActiveArchive archive(config.archive_capacity);

  CurriculumReport report;
  report.phases = sequence.phases;
  trainer.begin({config.filter.randomization.num_drones, config.horizon, config.discount});

  for (std::size_t iteration = 0; iteration < config.max_iterations; ++iteration) {
    IterationRecord record;
    record.iteration = iteration;
    record.phase = sequence.current;
    record.intrinsic = sequence.current_params();

    std::vector<TaskParams> tasks;
    std::vector<std::uint64_t> seeds;
    tasks.reserve(config.batch_size);
    for (std::size_t j = 0; j < config.batch_size; ++j) {
      SelectedExternal selected = select_external(archive, valid, p, rng);
      record.archive_draws += selected.from_archive ? 1 : 0;
      tasks.push_back({record.intrinsic, std::move(selected.external), arena});
      seeds.push_back(rng.next_u64());
    }

    const std::vector<EpisodeResult> results = trainer.train_on(tasks, seeds);
    if (results.size() != tasks.size()) {
      throw std::runtime_error("trainer returned " + std::to_string(results.size()) +
                               " results for " + std::to_string(tasks.size()) + " tasks");
    }
    std::size_t captured = 0;
    for (const EpisodeResult& r : results) captured += r.capture_return > 0.0 ? 1 : 0;
    record.batch_capture_rate = static_cast<double>(captured) / static_cast<double>(results.size());

    // Without external sampling the archive is never read, so it is not kept.
    if (config.external_enabled) update_active_archive(archive, results, rng);
    record.archive_size = archive.size();

    const PhaseEvaluation eval = evaluate_phase(trainer, record.intrinsic, arena,
                                                config.eval_episodes, config.success_threshold,
                                                valid, rng);
    record.eval_capture_rate = eval.capture_rate;

    bool finished = false;
    if (eval.passed) {
      if (sequence.at_final_phase()) {
        finished = true;
      } else {
        sequence.advance();
        archive.clear();
        record.advanced = true;
      }
    }
    record.archive_size_after = archive.size();
    report.iterations.push_back(record);
    if (finished) {
      report.completed = true;
      break;
    }
  }
  report.final_phase = sequence.current;
  return report;
}

void write_curriculum_report(std::ostream& out, const CurriculumReport& report) {
  for (const IterationRecord& r : report.iterations) {
    nlohmann::json line;
    line["iteration"] = r.iteration;
    line["phase"] = r.phase;
    line["capture_radius"] = r.intrinsic.capture_radius;
    line["evader_speed"] = r.intrinsic.evader_speed;
    line["batch_capture_rate"] = r.batch_capture_rate;
    line["archive_draws"] = r.archive_draws;
    line["archive_size"] = r.archive_size;
    line["eval_capture_rate"] = r.eval_capture_rate;
    line["advanced"] = r.advanced;
    line["archive_size_after"] = r.archive_size_after;
    out << line.dump() << '\n';
  }
  nlohmann::json summary;
  summary["summary"] = {{"completed", report.completed},
                        {"final_phase", report.final_phase},
                        {"phase_count", report.phases.size()},
                        {"iterations", report.iterations.size()}};
  out << summary.dump() << '\n';
}

CurriculumConfig parse_curriculum_config(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("curriculum config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("curriculum config must be a JSON object");

  CurriculumConfig c;
  std::size_t used = 0;
  auto get = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    ++used;
    try {
      field = j.at(key).get<std::decay_t<decltype(field)>>();
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument(std::string("curriculum config: bad value for '") + key + "'");
    }
  };
  get("batch_size", c.batch_size);
  get("archive_probability", c.archive_probability);
  get("success_threshold", c.success_threshold);
  get("eval_episodes", c.eval_episodes);
  get("archive_capacity", c.archive_capacity);
  get("discount", c.discount);
  get("intrinsic_enabled", c.intrinsic_enabled);
  get("external_enabled", c.external_enabled);
  get("max_iterations", c.max_iterations);
  get("initial_capture_radius", c.initial_capture_radius);
  get("initial_evader_speed", c.initial_evader_speed);
  get("target_capture_radius", c.target.capture_radius);
  get("target_evader_speed", c.target.evader_speed);
  get("parts", c.parts);
  get("horizon", c.horizon);

  RandomizationConfig& r = c.filter.randomization;
  get("arena_radius", r.arena.radius);
  get("arena_height", r.arena.height);
  get("num_drones", r.num_drones);
  get("max_obstacles", r.max_obstacles);
  get("obstacle_radius", r.obstacle_radius);
  get("obstacle_heights", r.obstacle_heights);
  get("continuous_heights", r.continuous_heights);
  if (used != j.size()) {
    for (const auto& [key, value] : j.items()) {
      static const char* const kKnown[] = {
          "batch_size", "archive_probability", "success_threshold", "eval_episodes",
          "archive_capacity", "discount", "intrinsic_enabled", "external_enabled",
          "max_iterations", "initial_capture_radius", "initial_evader_speed",
          "target_capture_radius", "target_evader_speed", "parts", "horizon", "arena_radius",
          "arena_height", "num_drones", "max_obstacles", "obstacle_radius", "obstacle_heights",
          "continuous_heights"};
      if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
        throw std::invalid_argument("curriculum config: unknown field '" + key + "'");
      }
    }
  }
  validate(c);
  return c;
}

}  // namespace pursuit
