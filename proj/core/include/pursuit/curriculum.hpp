#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "pursuit/episode.hpp"
#include "pursuit/feasibility.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

// ---------------------------------------------------------------------------
// Intrinsic parameter schedule

/// Ordered intrinsic parameters from easiest to hardest, plus the current phase.
struct PhaseSequence {
  std::vector<IntrinsicParams> phases;
  std::size_t current = 0;

  const IntrinsicParams& current_params() const { return phases.at(current); }
  bool at_final_phase() const { return current + 1 == phases.size(); }
  /// Moves to the next phase, saturating at the last one. Returns whether it moved.
  bool advance();
};

/// Evader speed first rises from `ve_init` to `ve_target` in `parts` equal steps
/// at fixed `dc_init`, then the capture radius shrinks to `dc_target` in `parts`
/// equal steps. Phase 0 is the initial pair; an empty interval contributes no
/// phases. Throws std::invalid_argument for inverted intervals or parts < 1.
PhaseSequence get_order(double dc_init, double ve_init, double dc_target, double ve_target,
                        int parts = 10);

// ---------------------------------------------------------------------------
// Active archive of unsolved layouts

class ActiveArchive {
 public:
  explicit ActiveArchive(std::size_t capacity = 1024);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const ExternalParams> items() const { return items_; }

  /// Appends; when full, first evicts a uniformly random existing element.
  void add(ExternalParams external, Rng& rng);
  const ExternalParams& sample(Rng& rng) const;
  void clear() { items_.clear(); }

 private:
  std::size_t capacity_;
  std::vector<ExternalParams> items_;
};

/// Adds the layout of every episode with zero capture return.
void update_active_archive(ActiveArchive& archive, std::span<const EpisodeResult> batch, Rng& rng);

/// Source of layouts from the filtered distribution.
using ValidSampler = std::function<ExternalParams(Rng&)>;

ValidSampler make_valid_sampler(FilterConfig config);

struct SelectedExternal {
  ExternalParams external;
  bool from_archive = false;
};

/// With probability p and a non-empty archive, a uniform archive member;
/// otherwise a fresh draw from `valid`. With an empty archive or p = 0 no
/// random number is spent on the coin flip.
SelectedExternal select_external(const ActiveArchive& archive, const ValidSampler& valid,
                                 double p, Rng& rng);

// ---------------------------------------------------------------------------
// Trainer contract

struct TrainerContext {
  std::size_t num_drones = 3;
  int horizon = 800;
  double discount = 0.99;
};

/// The learner being trained. `train_on` runs (and learns from) one episode
/// per task; `evaluate_policy` runs one episode without learning.
class Trainer {
 public:
  virtual ~Trainer() = default;

  virtual void begin(const TrainerContext& /*context*/) {}
  virtual std::vector<EpisodeResult> train_on(std::span<const TaskParams> tasks,
                                              std::span<const std::uint64_t> seeds) = 0;
  virtual EpisodeResult evaluate_policy(const TaskParams& task, std::uint64_t seed) = 0;

  /// Batch form of evaluate_policy; scripted trainers run it in parallel.
  virtual std::vector<EpisodeResult> evaluate_batch(std::span<const TaskParams> tasks,
                                                    std::span<const std::uint64_t> seeds);
};

/// A fixed heuristic policy: "training" only plays the episodes.
class ScriptedTrainer final : public Trainer {
 public:
  ScriptedTrainer(PolicyConfig policy, EpisodeOptions options, unsigned workers = 0);

  std::vector<EpisodeResult> train_on(std::span<const TaskParams> tasks,
                                      std::span<const std::uint64_t> seeds) override;
  EpisodeResult evaluate_policy(const TaskParams& task, std::uint64_t seed) override;
  std::vector<EpisodeResult> evaluate_batch(std::span<const TaskParams> tasks,
                                            std::span<const std::uint64_t> seeds) override;

 private:
  PolicyConfig policy_;
  EpisodeOptions options_;
  unsigned workers_;
};

/// Stand-in for a learner that never succeeds: every episode is reported as an
/// escape lasting the full horizon, without simulating it.
class NeverCaptureTrainer final : public Trainer {
 public:
  explicit NeverCaptureTrainer(int horizon = 800) : horizon_(horizon) {}

  std::vector<EpisodeResult> train_on(std::span<const TaskParams> tasks,
                                      std::span<const std::uint64_t> seeds) override;
  EpisodeResult evaluate_policy(const TaskParams& task, std::uint64_t seed) override;

 private:
  int horizon_;
};

// ---------------------------------------------------------------------------
// Phase evaluation and the driver

struct PhaseEvaluation {
  double capture_rate = 0.0;
  bool passed = false;
};

/// Plays `episodes` evaluation episodes at `intrinsic` on fresh filtered layouts
/// and passes when the fraction with positive capture return reaches `threshold`.
PhaseEvaluation evaluate_phase(Trainer& trainer, const IntrinsicParams& intrinsic,
                               const ArenaSpec& arena, std::size_t episodes, double threshold,
                               const ValidSampler& valid, Rng& rng);

struct CurriculumConfig {
  /// Tasks per training iteration.
  std::size_t batch_size = 64;
  /// Probability of replaying an archived layout.
  double archive_probability = 0.7;
  /// Capture rate needed to leave a phase.
  double success_threshold = 0.98;
  std::size_t eval_episodes = 1000;
  std::size_t archive_capacity = 1024;
  /// Forwarded to the trainer; unused by the engine.
  double discount = 0.99;
  bool intrinsic_enabled = true;
  bool external_enabled = true;
  std::size_t max_iterations = 1000;
  /// Initial capture radius; a non-positive value means the arena radius.
  double initial_capture_radius = 0.0;
  double initial_evader_speed = 0.0;
  IntrinsicParams target{0.12, 2.4};
  int parts = 10;
  /// Layout distribution (arena, drone count, obstacles) before filtering.
  FilterConfig filter;
  int horizon = 800;
};

/// Throws std::invalid_argument for out-of-range fields.
void validate(const CurriculumConfig& config);

struct IterationRecord {
  std::size_t iteration = 0;
  std::size_t phase = 0;
  IntrinsicParams intrinsic;
  double batch_capture_rate = 0.0;
  std::size_t archive_draws = 0;
  /// Archive size after the batch was added (before any clear).
  std::size_t archive_size = 0;
  double eval_capture_rate = 0.0;
  bool advanced = false;
  /// Archive size at the end of the iteration.
  std::size_t archive_size_after = 0;
};

struct CurriculumReport {
  std::vector<IntrinsicParams> phases;
  std::vector<IterationRecord> iterations;
  std::size_t final_phase = 0;
  /// The final phase passed evaluation before the iteration budget ran out.
  bool completed = false;
};

/// The dual curriculum loop: each iteration trains on a batch that combines the
/// current phase's intrinsic parameters with selected layouts, archives the
/// unsolved layouts, and evaluates the phase; a passing evaluation advances the
/// phase and clears the archive, and passing the last phase ends the run.
CurriculumReport run_dual_curriculum(Trainer& trainer, const CurriculumConfig& config, Rng& rng);

/// One JSON object per iteration, then a summary line.
void write_curriculum_report(std::ostream& out, const CurriculumReport& report);

/// Reads a configuration document (JSON); absent fields keep their defaults.
CurriculumConfig parse_curriculum_config(std::string_view document);

}  // namespace pursuit
