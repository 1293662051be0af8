#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pursuit/geometry.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/world.hpp"

namespace pursuit {

struct GridCell {
  int col = 0;
  int row = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Top-down rasterization of the arena. Cell (col, row) spans
/// [origin.x + col*cell_size, +cell_size) x [origin.y + row*cell_size, +cell_size).
class OccupancyGrid {
 public:
  OccupancyGrid(Vec2 origin, double cell_size, int width, int height);

  Vec2 origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  int width() const { return width_; }
  int height() const { return height_; }

  bool contains(GridCell c) const {
    return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_;
  }
  bool blocked(GridCell c) const { return cells_[index(c)] != 0; }
  void set_blocked(GridCell c, bool value) { cells_[index(c)] = value ? 1 : 0; }

  Vec2 cell_center(GridCell c) const;
  /// Cell containing a world point. The result may lie outside the grid.
  GridCell cell_of(const Vec2& p) const;

  std::size_t blocked_count() const;

  /// Text art, top row first: '#' blocked, '.' free.
  std::string render() const;

 private:
  std::size_t index(GridCell c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.col);
  }

  Vec2 origin_;
  double cell_size_;
  int width_;
  int height_;
  std::vector<unsigned char> cells_;
};

/// Blocks cells whose center lies outside the arena circle and cells whose
/// footprint, inflated by half a drone size, overlaps a full-height obstacle.
/// Obstacles lower than the arena can be flown over and never block.
OccupancyGrid rasterize(const ExternalParams& external, const ArenaSpec& arena,
                        double cell_size = kDroneSize, double drone_size = kDroneSize);

/// Every drone cell 4-connects to the evader cell through free cells. A blocked
/// or out-of-grid query cell makes the answer false.
bool is_feasible(const OccupancyGrid& grid, const std::vector<GridCell>& drone_cells,
                 GridCell evader_cell);

/// Rasterize and check a layout using the spawn positions it carries.
bool is_feasible(const ExternalParams& external, const ArenaSpec& arena,
                 double cell_size = kDroneSize, double drone_size = kDroneSize);

struct FilterConfig {
  RandomizationConfig randomization;
  /// Grid resolution; the drone size unless overridden.
  double cell_size = kDroneSize;
  /// Budget of whole-layout draws before giving up.
  int max_attempts = 10000;
};

/// Draws layouts until one passes the feasibility check. Throws SamplingError
/// once `max_attempts` layouts were rejected.
ExternalParams task_filter_sample(Rng& rng, const FilterConfig& config);

}  // namespace pursuit
