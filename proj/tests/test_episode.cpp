#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "pursuit/episode.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/policies.hpp"
#include "test_support.hpp"

namespace pursuit {
namespace {

TEST(Capture, StrictlyInsideTheRadius) {
  EXPECT_TRUE(check_capture(test::make_world({{0, 0, 0.5}}, {0.10, 0, 0.5}), 0.12));
  EXPECT_FALSE(check_capture(test::make_world({{0, 0, 0.5}}, {0.12, 0, 0.5}), 0.12));
  EXPECT_TRUE(check_capture(test::make_world({{-0.4, 0, 0.5}}, {0.49, 0, 0.5}), 0.9));
}

TEST(Reward, CaptureWithoutCollisions) {
  const WorldState w = test::make_world({{0, 0, 0.5}, {-0.5, 0, 0.5}, {0, -0.5, 0.5}}, {0.05, 0, 0.5});
  EXPECT_EQ(compute_reward(w, 0.12, 0.1), (std::vector<double>{10, 10, 10}));
}

TEST(Reward, CollisionWithoutCapture) {
  const WorldState w = test::make_world({{-0.6, 0, 0.5}, {0.35, 0, 0.5}, {0, -0.6, 0.5}}, {0.7, 0.3, 0.5},
                                        {{{0.0, 0.0}, 0.3, 1.2}});
  EXPECT_EQ(compute_reward(w, 0.12, 0.1), (std::vector<double>{0, -1, 0}));
}

TEST(Reward, CaptureAndCollisionAdd) {
  const WorldState w = test::make_world({{0.35, 0, 0.5}, {-0.6, 0, 0.5}, {0, -0.6, 0.5}}, {0.4, 0, 0.5},
                                        {{{0.0, 0.0}, 0.3, 1.2}});
  EXPECT_EQ(compute_reward(w, 0.12, 0.1), (std::vector<double>{9, 10, 10}));
}

EpisodeOptions instant_tracking() {
  EpisodeOptions o;
  o.dynamics.velocity_time_constant = 0.0;
  return o;
}

TEST(Episode, StraightChaseOfStillEvader) {
  // Gap 0.5 closes by 0.02 per step: after step t the gap is 0.5 - 0.02 (t + 1),
  // first below 0.12 at t = 19.
  const TaskParams task = test::make_task({{-0.25, 0, 0.6}}, {0.25, 0, 0.6}, 0.12, 0.0);
  auto policy = make_policy(AngelaniConfig{}, 1.0);
  const EpisodeOutcome out = run_episode(task, *policy, 0, instant_tracking());
  EXPECT_TRUE(out.result.captured);
  EXPECT_EQ(out.result.capture_timestep, 19);
  EXPECT_EQ(out.result.capture_return, 10.0);
  EXPECT_EQ(out.result.per_drone_return, (std::vector<double>{10.0}));
}

TEST(Episode, ZeroPolicyNeverCaptures) {
  TaskParams task = test::make_task({{-0.5, -0.5, 0.6}, {0.5, -0.5, 0.6}, {0, -0.7, 0.6}}, {0, 0.4, 0.6},
                                    0.12, 2.4);
  auto policy = make_policy(ZeroConfig{}, 1.0);
  const EpisodeResult r = run_episode(task, *policy, 0).result;
  EXPECT_FALSE(r.captured);
  EXPECT_EQ(r.capture_timestep, 800);
  EXPECT_EQ(r.capture_return, 0.0);
}

TEST(Episode, CaptureAtSpawnIsStepZero) {
  const TaskParams task = test::make_task({{0, 0, 0.6}, {-0.5, 0, 0.6}}, {0.08, 0, 0.6}, 0.12, 2.4);
  auto policy = make_policy(ZeroConfig{}, 1.0);
  const EpisodeResult r = run_episode(task, *policy, 0).result;
  EXPECT_TRUE(r.captured);
  EXPECT_EQ(r.capture_timestep, 0);
  EXPECT_GE(r.capture_return, 10.0);
}

TEST(Episode, TrajectoryHasOneRecordPerScoredStep) {
  const TaskParams task = test::make_task({{-0.25, 0, 0.6}}, {0.25, 0, 0.6}, 0.12, 0.0);
  auto policy = make_policy(AngelaniConfig{}, 1.0);
  EpisodeOptions o = instant_tracking();
  o.record_trajectory = true;
  const EpisodeOutcome out = run_episode(task, *policy, 0, o);
  ASSERT_EQ(out.trajectory.size(), 20u);
  EXPECT_TRUE(out.trajectory.back().captured);
  EXPECT_EQ(out.trajectory.back().step, 19);

  std::stringstream ss;
  write_trajectory(ss, out.trajectory);
  int lines = 0;
  for (std::string line; std::getline(ss, line); ++lines) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["step"].get<int>(), lines);
  }
  EXPECT_EQ(lines, 20);
}

class WrongArity final : public Policy {
 public:
  std::vector<DroneCommand> act(const WorldState&) override { return {}; }
};

TEST(Episode, PolicyFailureIsAnError) {
  const TaskParams task = test::make_task({{-0.25, 0, 0.6}}, {0.25, 0, 0.6});
  WrongArity policy;
  EXPECT_THROW(run_episode(task, policy, 0), PolicyError);
}

class CountingPolicy final : public Policy {
 public:
  explicit CountingPolicy(int delay) : delay_(delay) {}
  std::vector<DroneCommand> act(const WorldState&) override {
    ++calls;
    return {VelocityCommand{{1, 0, 0}}};
  }
  void after_step(const WorldState&, std::span<const double>, bool, bool done) override {
    ++steps;
    last_done = done;
  }
  int command_delay_steps() const override { return delay_; }
  int calls = 0;
  int steps = 0;
  bool last_done = false;

 private:
  int delay_;
};

TEST(Episode, CommandDelayHoversFirst) {
  const TaskParams task = test::make_task({{-0.5, 0, 0.6}}, {0.5, 0, 0.6}, 0.12, 0.0);
  EpisodeOptions o = instant_tracking();
  o.horizon = 10;
  o.record_trajectory = true;
  CountingPolicy delayed(3);
  const EpisodeOutcome out = run_episode(task, delayed, 0, o);
  EXPECT_EQ(out.trajectory[2].drone_positions[0].x, -0.5);
  EXPECT_NEAR(out.trajectory[3].drone_positions[0].x, -0.48, 1e-15);
  EXPECT_EQ(delayed.calls, 10);
  EXPECT_EQ(delayed.steps, 10);
  EXPECT_TRUE(delayed.last_done);
}

TEST(Metrics, MixedOutcomes) {
  std::vector<EpisodeResult> rs(3);
  rs[0].captured = true;
  rs[0].capture_timestep = 200;
  rs[1].capture_timestep = 800;
  rs[2].captured = true;
  rs[2].capture_timestep = 400;
  const Metrics m = aggregate_metrics(rs);
  EXPECT_NEAR(m.capture_rate, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.mean_capture_timestep, 1400.0 / 3.0, 1e-12);
}

TEST(Metrics, DegenerateBatches) {
  std::vector<EpisodeResult> all(4);
  for (auto& r : all) r.captured = true;
  EXPECT_EQ(aggregate_metrics(all).capture_rate, 1.0);
  EXPECT_EQ(aggregate_metrics(all).mean_capture_timestep, 0.0);
  std::vector<EpisodeResult> none(4);
  for (auto& r : none) r.capture_timestep = 800;
  EXPECT_EQ(aggregate_metrics(none).capture_rate, 0.0);
  EXPECT_EQ(aggregate_metrics(none).mean_capture_timestep, 800.0);
  EXPECT_THROW(aggregate_metrics(std::vector<EpisodeResult>{}), std::invalid_argument);
}

TEST(ResultJson, CarriesTheTask) {
  EpisodeResult r;
  r.captured = true;
  r.capture_timestep = 42;
  r.per_drone_return = {10.0, 9.0};
  r.capture_return = 10.0;
  r.task = test::make_task({{0.1, 0.2, 0.3}, {-0.1, 0.2, 0.3}}, {0.5, 0, 0.6});
  r.seed = 7;
  const auto j = nlohmann::json::parse(episode_result_json(r));
  EXPECT_EQ(j["capture_timestep"].get<int>(), 42);
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 7u);
  EXPECT_EQ(load_scenario(j["task"].dump()), r.task);
}

}  // namespace
}  // namespace pursuit
