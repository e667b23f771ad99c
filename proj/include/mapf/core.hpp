#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mapf {

// Grid coordinates. May hold out-of-bounds values transiently (a proposed
// move before validation); anything stored in a WorldState is in-bounds.
struct Position {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

// Global action ordering shared by every module: Q rows, observation
// channels, serialized solutions all index actions this way.
enum class Action : std::uint8_t { Stay = 0, Up = 1, Down = 2, Left = 3, Right = 4 };

inline constexpr int kActionCount = 5;

inline constexpr std::array<Action, kActionCount> kAllActions = {
    Action::Stay, Action::Up, Action::Down, Action::Left, Action::Right};

// Move actions in the canonical direction order Up, Down, Left, Right.
inline constexpr std::array<Action, 4> kMoveActions = {Action::Up, Action::Down,
                                                       Action::Left, Action::Right};

constexpr Position apply_action(Position p, Action a) {
  switch (a) {
    case Action::Stay:  return p;
    case Action::Up:    return {p.row - 1, p.col};
    case Action::Down:  return {p.row + 1, p.col};
    case Action::Left:  return {p.row, p.col - 1};
    case Action::Right: return {p.row, p.col + 1};
  }
  return p;
}

constexpr int chebyshev_distance(Position a, Position b) {
  int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return dr > dc ? dr : dc;
}

constexpr int manhattan_distance(Position a, Position b) {
  int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return dr + dc;
}

// Rectangular occupancy grid; cell value 1 is an obstacle, 0 is free.
class GridMap {
 public:
  GridMap() = default;
  GridMap(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height),
        cells_(static_cast<std::size_t>(width) * height, fill) {
    if (width < 1 || height < 1) throw std::invalid_argument("GridMap: empty dimensions");
  }

  static GridMap from_cells(int width, int height, std::vector<std::uint8_t> cells) {
    GridMap m(width, height);
    if (cells.size() != m.cells_.size())
      throw std::invalid_argument("GridMap: cell count does not match dimensions");
    for (std::uint8_t v : cells)
      if (v > 1) throw std::invalid_argument("GridMap: cell value must be 0 or 1");
    m.cells_ = std::move(cells);
    return m;
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t cell_count() const { return cells_.size(); }

  bool in_bounds(Position p) const {
    return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
  }
  bool is_obstacle(Position p) const { return cells_[index(p)] != 0; }
  bool is_free(Position p) const { return in_bounds(p) && !is_obstacle(p); }

  void set_obstacle(Position p, bool v) { cells_[index(p)] = v ? 1 : 0; }

  const std::vector<std::uint8_t>& cells() const { return cells_; }

  std::size_t index(Position p) const {
    return static_cast<std::size_t>(p.row) * width_ + p.col;
  }

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

}  // namespace mapf

template <>
struct std::hash<mapf::Position> {
  std::size_t operator()(const mapf::Position& p) const noexcept {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.row)) << 32) |
        static_cast<std::uint32_t>(p.col));
  }
};
