#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mapf/core.hpp"

namespace mapf {

// The three map treatments for expert path search:
//   Static (0)          - the map as-is, agents ignored.
//   AvoidAllAgents (1)  - every other agent's cell is an obstacle.
//   AvoidOnGoalAgents(2)- only agents parked on their goals are obstacles.
enum class AStarKind : std::uint8_t {
  Static = 0,
  AvoidAllAgents = 1,
  AvoidOnGoalAgents = 2,
};

AStarKind astar_kind_from_int(int tau);

// Returns the map with agent cells marked per `kind`. `self` is never
// marked; existing obstacles are never cleared.
GridMap transform_map(const GridMap& map, AStarKind kind, int self,
                      std::span<const Position> positions, std::span<const Position> goals);

// Minimal action sequence from start to goal on the transformed map, or
// nullopt when no path exists. start == goal yields an empty sequence. The
// agent is identified as the one whose current position equals `start`.
// The start cell itself is traversable even if marked (an agent must be
// able to leave a cell a working map has claimed).
//
// Deterministic tie-breaking: Manhattan heuristic, equal f broken by lower
// (row, col); neighbors expanded in Up, Down, Left, Right order.
std::optional<std::vector<Action>> astar_tau(Position start, Position goal, const GridMap& map,
                                             AStarKind kind, std::span<const Position> positions,
                                             std::span<const Position> goals);

}  // namespace mapf
