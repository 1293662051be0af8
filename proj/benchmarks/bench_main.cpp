#include <benchmark/benchmark.h>

#include "pursuit/episode.hpp"
#include "pursuit/evader.hpp"
#include "pursuit/feasibility.hpp"
#include "pursuit/policies.hpp"
#include "pursuit/runner.hpp"

namespace {

using namespace pursuit;

TaskParams tower_task() { return episode_task(resolve_scenario("tower3"), 1); }

void BM_EvaderForce(benchmark::State& state) {
  const WorldState w = WorldState::initial(tower_task());
  for (auto _ : state) benchmark::DoNotOptimize(evader_force(w));
}
BENCHMARK(BM_EvaderForce);

// A full horizon: the zero policy never captures.
void BM_EpisodeZeroPolicy(benchmark::State& state) {
  const TaskParams task = tower_task();
  auto policy = make_policy(ZeroConfig{}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(run_episode(task, *policy, 0));
  state.SetItemsProcessed(state.iterations() * 800);
}
BENCHMARK(BM_EpisodeZeroPolicy)->Unit(benchmark::kMillisecond);

void BM_EpisodeApf(benchmark::State& state) {
  const TaskParams task = tower_task();
  auto policy = make_policy(ApfConfig{}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(run_episode(task, *policy, 0));
}
BENCHMARK(BM_EpisodeApf)->Unit(benchmark::kMillisecond);

void BM_RasterizeAndSearch(benchmark::State& state) {
  RandomizationConfig config;
  config.max_obstacles = 3;
  Rng rng(5);
  const ExternalParams e = sample_external_params(rng, config);
  for (auto _ : state) benchmark::DoNotOptimize(is_feasible(e, config.arena));
}
BENCHMARK(BM_RasterizeAndSearch);

void BM_TaskFilterSample(benchmark::State& state) {
  FilterConfig config;
  config.randomization.max_obstacles = 3;
  Rng rng(9);
  for (auto _ : state) benchmark::DoNotOptimize(task_filter_sample(rng, config));
}
BENCHMARK(BM_TaskFilterSample);

}  // namespace

BENCHMARK_MAIN();
