#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "mapf/core.hpp"

namespace mapf {

// Exact 4-connected shortest distances to one goal cell; obstacle and
// walled-off cells carry kUnreachable.
class DistanceField {
 public:
  static constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

  DistanceField() = default;
  DistanceField(int width, int height)
      : width_(width), height_(height),
        dist_(static_cast<std::size_t>(width) * height, kUnreachable) {}

  int width() const { return width_; }
  int height() const { return height_; }

  std::int32_t at(Position p) const {
    return dist_[static_cast<std::size_t>(p.row) * width_ + p.col];
  }
  std::int32_t& at(Position p) {
    return dist_[static_cast<std::size_t>(p.row) * width_ + p.col];
  }
  bool reachable(Position p) const { return at(p) != kUnreachable; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int32_t> dist_;
};

// Backward BFS from the goal over free cells. Throws std::invalid_argument
// if the goal is not a free cell.
DistanceField bfs_distance_field(const GridMap& map, Position goal);

// One binary F x F grid per direction (Up, Down, Left, Right), centered on
// `center`: 1 where the cell is an in-map free cell whose neighbor in that
// direction is in-map, free, and strictly closer to the goal; 0 elsewhere,
// including obstacle and out-of-map cells. fov must be odd.
using ChannelGrid = std::vector<std::uint8_t>;
std::array<ChannelGrid, 4> heuristic_channels(const DistanceField& field, const GridMap& map,
                                              Position center, int fov);

}  // namespace mapf
