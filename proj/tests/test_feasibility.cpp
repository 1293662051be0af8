#include <gtest/gtest.h>

#include <cmath>
#include <queue>

#include "pursuit/errors.hpp"
#include "pursuit/feasibility.hpp"
#include "test_support.hpp"

namespace pursuit {
namespace {

// Breadth-first flood fill, used as an independent reachability oracle.
bool bfs_feasible(const OccupancyGrid& g, const std::vector<GridCell>& drones, GridCell evader) {
  auto open = [&](GridCell c) { return g.contains(c) && !g.blocked(c); };
  if (!open(evader)) return false;
  std::vector<std::vector<bool>> seen(g.height(), std::vector<bool>(g.width(), false));
  std::queue<GridCell> q;
  q.push(evader);
  seen[evader.row][evader.col] = true;
  while (!q.empty()) {
    const GridCell c = q.front();
    q.pop();
    for (const GridCell n : {GridCell{c.col + 1, c.row}, GridCell{c.col - 1, c.row},
                             GridCell{c.col, c.row + 1}, GridCell{c.col, c.row - 1}}) {
      if (open(n) && !seen[n.row][n.col]) {
        seen[n.row][n.col] = true;
        q.push(n);
      }
    }
  }
  for (const GridCell& d : drones) {
    if (!open(d) || !seen[d.row][d.col]) return false;
  }
  return true;
}

std::vector<GridCell> drone_cells(const OccupancyGrid& g, const ExternalParams& e) {
  std::vector<GridCell> out;
  for (const Vec3& p : e.drone_spawns) out.push_back(g.cell_of(p.xy()));
  return out;
}

// A row of full-height (or low) cylinders along the x axis, end to end.
std::vector<Obstacle> wall(double height) {
  std::vector<Obstacle> out;
  for (int k = -8; k <= 8; ++k) out.push_back({{0.1 * k, 0.0}, 0.1, height});
  return out;
}

ExternalParams across_the_wall(double height) {
  ExternalParams e;
  e.drone_spawns = {{-0.3, -0.5, 0.6}, {0.3, -0.5, 0.6}};
  e.evader_spawn = {0.0, 0.5, 0.6};
  e.obstacles = wall(height);
  return e;
}

TEST(Rasterize, EmptyArenaBlocksOnlyOutsideTheCircle) {
  const ArenaSpec arena;
  const OccupancyGrid g = rasterize({}, arena);
  ASSERT_EQ(g.width(), 18);
  ASSERT_EQ(g.height(), 18);
  for (int row = 0; row < 18; ++row) {
    for (int col = 0; col < 18; ++col) {
      const Vec2 c = g.cell_center({col, row});
      EXPECT_EQ(g.blocked({col, row}), std::hypot(c.x, c.y) > 0.9);
    }
  }
}

TEST(Rasterize, FullHeightTowerMatchesPointSampling) {
  const ArenaSpec arena;
  ExternalParams e;
  e.obstacles = {{{0.0, 0.0}, 0.3, 1.2}};
  const OccupancyGrid g = rasterize(e, arena);
  std::size_t tower_cells = 0;
  for (int row = 0; row < g.height(); ++row) {
    for (int col = 0; col < g.width(); ++col) {
      const Vec2 c = g.cell_center({col, row});
      if (std::hypot(c.x, c.y) > 0.9) continue;
      // 100 x 100 points across the cell footprint grown by half a drone on each side.
      const double half = 0.05 + 0.05;
      bool hit = false;
      for (int i = 0; i < 100 && !hit; ++i) {
        for (int j = 0; j < 100 && !hit; ++j) {
          const double x = c.x - half + 2 * half * i / 99.0;
          const double y = c.y - half + 2 * half * j / 99.0;
          hit = std::hypot(x, y) < 0.3;
        }
      }
      EXPECT_EQ(g.blocked({col, row}), hit) << col << "," << row;
      tower_cells += hit ? 1 : 0;
    }
  }
  EXPECT_GT(tower_cells, 0u);
}

TEST(Rasterize, LowObstaclesNeverBlock) {
  const ArenaSpec arena;
  ExternalParams e;
  e.obstacles = {{{0.0, 0.0}, 0.3, 0.6}};
  EXPECT_EQ(rasterize(e, arena).blocked_count(), rasterize({}, arena).blocked_count());
}

TEST(Rasterize, RenderMarksBlockedCells) {
  const OccupancyGrid g = rasterize({}, ArenaSpec{});
  const std::string art = g.render();
  EXPECT_EQ(std::count(art.begin(), art.end(), '\n'), 18);
  EXPECT_EQ(static_cast<std::size_t>(std::count(art.begin(), art.end(), '#')), g.blocked_count());
  EXPECT_EQ(art[0], '#');
}

TEST(Feasible, FullHeightWallSeparates) {
  EXPECT_FALSE(is_feasible(across_the_wall(1.2), ArenaSpec{}));
}

TEST(Feasible, LowWallCanBeFlownOver) {
  EXPECT_TRUE(is_feasible(across_the_wall(0.6), ArenaSpec{}));
}

TEST(Feasible, SameCellIsReachable) {
  const OccupancyGrid g = rasterize({}, ArenaSpec{});
  EXPECT_TRUE(is_feasible(g, {{9, 9}}, {9, 9}));
}

TEST(Feasible, BlockedOrOutsideQueryCellIsInfeasible) {
  const OccupancyGrid g = rasterize({}, ArenaSpec{});
  EXPECT_FALSE(is_feasible(g, {{0, 0}}, {9, 9}));
  EXPECT_FALSE(is_feasible(g, {{9, 9}}, {0, 0}));
  EXPECT_FALSE(is_feasible(g, {{9, 9}}, {30, 9}));
}

TEST(Feasible, DfsAgreesWithBfsOnRandomGrids) {
  Rng rng(2024);
  int infeasible = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int w = 4 + static_cast<int>(rng.uniform_index(20));
    const int h = 4 + static_cast<int>(rng.uniform_index(20));
    OccupancyGrid g({0, 0}, 0.1, w, h);
    const double density = rng.uniform(0.1, 0.6);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) g.set_blocked({c, r}, rng.bernoulli(density));
    }
    auto cell = [&] {
      return GridCell{static_cast<int>(rng.uniform_index(w)), static_cast<int>(rng.uniform_index(h))};
    };
    std::vector<GridCell> drones;
    const auto n = 1 + rng.uniform_index(4);
    for (std::uint64_t k = 0; k < n; ++k) drones.push_back(cell());
    const GridCell evader = cell();
    const bool want = bfs_feasible(g, drones, evader);
    ASSERT_EQ(is_feasible(g, drones, evader), want) << "trial " << trial;
    infeasible += want ? 0 : 1;
  }
  // Both verdicts must actually occur.
  EXPECT_GT(infeasible, 1000);
  EXPECT_LT(infeasible, 9000);
}

TEST(Feasible, DfsAgreesWithBfsOnRandomScenarios) {
  RandomizationConfig config;
  config.max_obstacles = 6;
  config.obstacle_radius = 0.25;
  int infeasible = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Rng rng(seed);
    const ExternalParams e = sample_external_params(rng, config);
    const OccupancyGrid g = rasterize(e, config.arena);
    const bool want = bfs_feasible(g, drone_cells(g, e), g.cell_of(e.evader_spawn.xy()));
    ASSERT_EQ(is_feasible(e, config.arena), want) << "seed " << seed;
    infeasible += want ? 0 : 1;
  }
  EXPECT_GT(infeasible, 0);
}

TEST(Feasible, UnblockingNeverBreaksFeasibility) {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    OccupancyGrid g({0, 0}, 0.1, 12, 12);
    for (int r = 0; r < 12; ++r) {
      for (int c = 0; c < 12; ++c) g.set_blocked({c, r}, rng.bernoulli(0.35));
    }
    const GridCell a{static_cast<int>(rng.uniform_index(12)), static_cast<int>(rng.uniform_index(12))};
    const GridCell b{static_cast<int>(rng.uniform_index(12)), static_cast<int>(rng.uniform_index(12))};
    if (!is_feasible(g, {a}, b)) continue;
    const GridCell u{static_cast<int>(rng.uniform_index(12)), static_cast<int>(rng.uniform_index(12))};
    g.set_blocked(u, false);
    ASSERT_TRUE(is_feasible(g, {a}, b));
  }
}

TEST(Feasible, RaisingObstaclesNeverMakesInfeasibleFeasible) {
  RandomizationConfig config;
  config.max_obstacles = 5;
  config.obstacle_heights = {0.6};
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    Rng rng(seed);
    ExternalParams e = sample_external_params(rng, config);
    Rng pick(seed + 1);
    ExternalParams raised = e;
    for (Obstacle& o : raised.obstacles) {
      if (pick.bernoulli(0.5)) o.height = config.arena.height;
    }
    if (!is_feasible(e, config.arena)) {
      ASSERT_FALSE(is_feasible(raised, config.arena)) << "seed " << seed;
    }
    ASSERT_TRUE(is_feasible(e, config.arena) || !is_feasible(raised, config.arena));
  }
}

TEST(TaskFilter, NoObstaclesAcceptsTheFirstDraw) {
  FilterConfig config;
  config.randomization.max_obstacles = 0;
  Rng a(17);
  Rng b(17);
  EXPECT_EQ(task_filter_sample(a, config), sample_external_params(b, config.randomization));
}

TEST(TaskFilter, AcceptedSamplesPassTheFloodFillOracle) {
  FilterConfig config;
  config.randomization.max_obstacles = 6;
  config.randomization.obstacle_radius = 0.25;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Rng rng(seed);
    const ExternalParams e = task_filter_sample(rng, config);
    const OccupancyGrid g = rasterize(e, config.randomization.arena);
    ASSERT_TRUE(bfs_feasible(g, drone_cells(g, e), g.cell_of(e.evader_spawn.xy()))) << seed;
  }
}

TEST(TaskFilter, WalledOffArenaExhaustsAttempts) {
  FilterConfig config;
  config.randomization.fixed_obstacles = wall(1.2);
  config.randomization.num_drones = 16;
  config.max_attempts = 20;
  Rng rng(3);
  EXPECT_THROW(task_filter_sample(rng, config), SamplingError);
}

}  // namespace
}  // namespace pursuit
