#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pursuit/grid_search.hpp"
#include "pursuit/runner.hpp"
#include "test_support.hpp"

namespace pursuit {
namespace {

TEST(Scenarios, PresetRandomAndFile) {
  const ScenarioSource tower = resolve_scenario("tower1");
  EXPECT_EQ(tower.base.external.obstacles.size(), 1u);
  EXPECT_FALSE(tower.randomize_obstacles);

  const ScenarioSource random = resolve_scenario("random");
  EXPECT_TRUE(random.randomize_obstacles);

  const std::string path = ::testing::TempDir() + "scenario_file.json";
  {
    std::ofstream out(path);
    out << save_scenario(load_preset("curve2"));
  }
  EXPECT_EQ(resolve_scenario(path).base, load_preset("curve2"));
  std::remove(path.c_str());

  EXPECT_THROW(resolve_scenario("no_such_scenario"), std::invalid_argument);
}

TEST(Scenarios, EpisodeTaskKeepsTheLayoutAndRedrawsSpawns) {
  const ScenarioSource tower = resolve_scenario("tower1");
  const TaskParams a = episode_task(tower, 10);
  const TaskParams b = episode_task(tower, 11);
  EXPECT_EQ(a, episode_task(tower, 10));
  EXPECT_EQ(a.external.obstacles, tower.base.external.obstacles);
  EXPECT_NE(a.external.drone_spawns, b.external.drone_spawns);
  EXPECT_TRUE(is_feasible(a.external, a.arena));

  ScenarioSource fixed = tower;
  fixed.randomize_spawns = false;
  EXPECT_EQ(episode_task(fixed, 10), tower.base);
}

EvaluationRequest small_request(const std::string& scenario, PolicyConfig policy, std::size_t episodes) {
  EvaluationRequest r;
  r.scenario = resolve_scenario(scenario);
  r.policy = std::move(policy);
  r.episodes = episodes;
  r.seed = 100;
  return r;
}

TEST(Evaluate, IndependentOfWorkerCount) {
  EvaluationRequest r = small_request("tower3", ApfConfig{}, 40);
  r.workers = 1;
  const auto serial = evaluate(r);
  r.workers = 4;
  EXPECT_EQ(evaluate(r), serial);
  for (std::size_t k = 0; k < serial.size(); ++k) EXPECT_EQ(serial[k].seed, 100 + k);
}

TEST(Evaluate, SeedGroupsUsePopulationStd) {
  EvaluationRequest r = small_request("empty", JanosovConfig{}, 50);
  r.scenario.base.intrinsic.capture_radius = 0.3;
  const MetricsSummary s = evaluate_seeds(r, 3);
  ASSERT_EQ(s.per_seed.size(), 3u);
  double mean = 0, var = 0;
  for (const Metrics& m : s.per_seed) mean += m.capture_rate / 3;
  for (const Metrics& m : s.per_seed) var += (m.capture_rate - mean) * (m.capture_rate - mean) / 3;
  EXPECT_NEAR(s.capture_rate_mean, mean, 1e-15);
  EXPECT_NEAR(s.capture_rate_std, std::sqrt(var), 1e-15);

  // Group 1 is exactly the batch starting at seed + episodes.
  EvaluationRequest second = r;
  second.seed = r.seed + r.episodes;
  EXPECT_EQ(aggregate_metrics(evaluate(second)).capture_rate, s.per_seed[1].capture_rate);
}

TEST(Sweep, SingleValueMatchesPlainEvaluation) {
  EvaluationRequest r = small_request("empty", AngelaniConfig{}, 60);
  const auto rows = sweep(r, SweepAxis::kCaptureRadius, {0.3}, 2);
  r.scenario.base.intrinsic.capture_radius = 0.3;
  const MetricsSummary direct = evaluate_seeds(r, 2);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].summary.capture_rate_mean, direct.capture_rate_mean);
  EXPECT_EQ(rows[0].summary.capture_timestep_mean, direct.capture_timestep_mean);
}

TEST(Sweep, CaptureRateFallsWithTheRadius) {
  EvaluationRequest r = small_request("empty", ApfConfig{}, 300);
  r.scenario.base.intrinsic.evader_speed = 2.4;
  const auto rows = sweep(r, SweepAxis::kCaptureRadius, {0.9, 0.6, 0.3, 0.12}, 1);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_LE(rows[k].summary.capture_rate_mean, rows[k - 1].summary.capture_rate_mean);
  }
}

TEST(Sweep, CaptureTakesLongerAgainstFasterEvaders) {
  EvaluationRequest r = small_request("empty", ApfConfig{}, 300);
  r.scenario.base.intrinsic.capture_radius = 0.2;
  const auto rows = sweep(r, SweepAxis::kEvaderSpeed, {0.0, 1.2, 2.4}, 1);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GE(rows[k].summary.capture_timestep_mean, rows[k - 1].summary.capture_timestep_mean);
  }
}

TEST(Sweep, AxisNames) {
  EXPECT_EQ(parse_sweep_axis("evader_speed"), SweepAxis::kEvaderSpeed);
  EXPECT_EQ(sweep_axis_name(SweepAxis::kCaptureRadius), "capture_radius");
  EXPECT_THROW(parse_sweep_axis("height"), std::invalid_argument);
}

TEST(Tables, MetricsRowFormat) {
  MetricsSummary s;
  s.scenario = "empty";
  s.policy = "apf";
  s.capture_rate_mean = 2.0 / 3.0;
  s.capture_timestep_mean = 466.6666666;
  s.episodes_per_seed = 1000;
  s.per_seed.resize(3);
  std::stringstream ss;
  write_metrics_table(ss, {s});
  EXPECT_EQ(ss.str(),
            "scenario,policy,capture_rate,capture_timestep_mean,capture_rate_std,capture_timestep_std,"
            "episodes,seeds\n"
            "empty,apf,0.666667,466.666667,0.000000,0.000000,1000,3\n");
}

TEST(GridSearch, ExpandGridOrder) {
  const auto cells = expand_grid(ApfConfig{}, {{"attract_gain", {1.0, 2.0}}, {"peer_repulsion_gain", {0.0, 0.1, 0.2}}});
  ASSERT_EQ(cells.size(), 6u);
  EXPECT_EQ(std::get<ApfConfig>(cells[1]).attract_gain, 1.0);
  EXPECT_EQ(std::get<ApfConfig>(cells[1]).peer_repulsion_gain, 0.1);
  EXPECT_EQ(std::get<ApfConfig>(cells[3]).attract_gain, 2.0);
  EXPECT_EQ(std::get<ApfConfig>(cells[3]).peer_repulsion_gain, 0.0);
  EXPECT_EQ(expand_grid(ApfConfig{}, {}).size(), 1u);
  EXPECT_THROW(expand_grid(ApfConfig{}, {{"attract_gain", {}}}), std::invalid_argument);
}

TEST(GridSearch, SingleCellReportsItsScore) {
  EvaluationRequest r = small_request("empty", AngelaniConfig{}, 50);
  r.scenario.base.intrinsic.capture_radius = 0.3;
  const GridSearchResult g = grid_search({AngelaniConfig{}}, {r.scenario}, 50, 100);
  ASSERT_EQ(g.table.size(), 1u);
  EXPECT_EQ(g.best_index, 0u);
  EXPECT_EQ(g.best().capture_rate, aggregate_metrics(evaluate(r)).capture_rate);
}

TEST(GridSearch, PursuitBeatsStandingStill) {
  ScenarioSource s = resolve_scenario("empty");
  s.base.intrinsic = {0.6, 0.0};
  const GridSearchResult g = grid_search({ZeroConfig{}, AngelaniConfig{}}, {s}, 100, 1);
  EXPECT_EQ(g.best_index, 1u);
  EXPECT_GT(g.table[1].capture_rate, g.table[0].capture_rate);
}

TEST(GridSearch, ReproducibleWinnerOnTower3) {
  const auto cells = expand_grid(ApfConfig{}, {{"obstacle_repulsion_gain", {0.0, 0.02, 0.1}},
                                               {"peer_repulsion_gain", {0.0, 0.01}}});
  const std::vector<ScenarioSource> scenarios{resolve_scenario("tower3")};
  const GridSearchResult a = grid_search(cells, scenarios, 40, 7, {}, 1);
  const GridSearchResult b = grid_search(cells, scenarios, 40, 7, {}, 3);
  EXPECT_EQ(a.best_index, b.best_index);
  for (std::size_t k = 0; k < a.table.size(); ++k) {
    EXPECT_EQ(a.table[k].capture_rate, b.table[k].capture_rate);
    EXPECT_EQ(a.table[k].mean_capture_timestep, b.table[k].mean_capture_timestep);
  }
}

}  // namespace
}  // namespace pursuit
