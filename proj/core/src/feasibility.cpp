#include "pursuit/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pursuit/errors.hpp"

namespace pursuit {

OccupancyGrid::OccupancyGrid(Vec2 origin, double cell_size, int width, int height)
    : origin_(origin), cell_size_(cell_size), width_(width), height_(height) {
  if (!(cell_size > 0.0) || width <= 0 || height <= 0) {
    throw std::invalid_argument("occupancy grid needs a positive cell size and extent");
  }
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

Vec2 OccupancyGrid::cell_center(GridCell c) const {
  return {origin_.x + (c.col + 0.5) * cell_size_, origin_.y + (c.row + 0.5) * cell_size_};
}

GridCell OccupancyGrid::cell_of(const Vec2& p) const {
  return {static_cast<int>(std::floor((p.x - origin_.x) / cell_size_)),
          static_cast<int>(std::floor((p.y - origin_.y) / cell_size_))};
}

std::size_t OccupancyGrid::blocked_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

std::string OccupancyGrid::render() const {
  std::string out;
  out.reserve(static_cast<std::size_t>((width_ + 1) * height_));
  for (int row = height_ - 1; row >= 0; --row) {
    for (int col = 0; col < width_; ++col) out.push_back(blocked({col, row}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

namespace {

// Does the axis-aligned square [lo, hi] overlap the open disk (center, radius)?
bool square_overlaps_disk(Vec2 lo, Vec2 hi, Vec2 center, double radius) {
  const double nx = std::clamp(center.x, lo.x, hi.x);
  const double ny = std::clamp(center.y, lo.y, hi.y);
  return std::hypot(nx - center.x, ny - center.y) < radius;
}

}  // namespace

OccupancyGrid rasterize(const ExternalParams& external, const ArenaSpec& arena, double cell_size,
                        double drone_size) {
  if (!(cell_size > 0.0)) throw std::invalid_argument("cell_size must be positive");
  const int cells = static_cast<int>(std::ceil(2.0 * arena.radius / cell_size - 1e-9));
  OccupancyGrid grid({-arena.radius, -arena.radius}, cell_size, cells, cells);

  std::vector<const Obstacle*> walls;
  for (const Obstacle& o : external.obstacles) {
    if (o.height >= arena.height) walls.push_back(&o);
  }

  const double pad = 0.5 * cell_size + 0.5 * drone_size;
  for (int row = 0; row < cells; ++row) {
    for (int col = 0; col < cells; ++col) {
      const Vec2 c = grid.cell_center({col, row});
      bool blocked = std::hypot(c.x, c.y) > arena.radius;
      for (std::size_t k = 0; !blocked && k < walls.size(); ++k) {
        blocked = square_overlaps_disk({c.x - pad, c.y - pad}, {c.x + pad, c.y + pad},
                                       walls[k]->center_xy, walls[k]->radius);
      }
      grid.set_blocked({col, row}, blocked);
    }
  }
  return grid;
}

bool is_feasible(const OccupancyGrid& grid, const std::vector<GridCell>& drone_cells,
                 GridCell evader_cell) {
  auto open = [&](GridCell c) { return grid.contains(c) && !grid.blocked(c); };
  if (!open(evader_cell)) return false;
  for (const GridCell& c : drone_cells) {
    if (!open(c)) return false;
  }

  // Iterative DFS from the evader; every drone must land in its component.
  std::vector<unsigned char> seen(
      static_cast<std::size_t>(grid.width()) * static_cast<std::size_t>(grid.height()), 0);
  auto flat = [&](GridCell c) {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(grid.width()) +
           static_cast<std::size_t>(c.col);
  };
  std::vector<GridCell> stack{evader_cell};
  seen[flat(evader_cell)] = 1;
  constexpr GridCell kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!stack.empty()) {
    const GridCell c = stack.back();
    stack.pop_back();
    for (const GridCell& d : kSteps) {
      const GridCell n{c.col + d.col, c.row + d.row};
      if (open(n) && !seen[flat(n)]) {
        seen[flat(n)] = 1;
        stack.push_back(n);
      }
    }
  }
  return std::all_of(drone_cells.begin(), drone_cells.end(),
                     [&](GridCell c) { return seen[flat(c)] != 0; });
}

bool is_feasible(const ExternalParams& external, const ArenaSpec& arena, double cell_size,
                 double drone_size) {
  const OccupancyGrid grid = rasterize(external, arena, cell_size, drone_size);
  std::vector<GridCell> drones;
  drones.reserve(external.drone_spawns.size());
  for (const Vec3& p : external.drone_spawns) drones.push_back(grid.cell_of(p.xy()));
  return is_feasible(grid, drones, grid.cell_of(external.evader_spawn.xy()));
}

ExternalParams task_filter_sample(Rng& rng, const FilterConfig& config) {
  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    ExternalParams candidate = sample_external_params(rng, config.randomization);
    if (is_feasible(candidate, config.randomization.arena, config.cell_size,
                    config.randomization.drone_size)) {
      return candidate;
    }
  }
  throw SamplingError("no feasible layout within " + std::to_string(config.max_attempts) +
                      " attempts");
}

}  // namespace pursuit
