#pragma once

#include <array>

#include "mapf/distance_field.hpp"
#include "mapf/world.hpp"

namespace mapf {

// Agent-centered FOV window, six binary channels. Channel entries are
// row-major fov x fov grids. Heuristic channels follow the direction order
// Up, Down, Left, Right and are computed against the observing agent's own
// goal. Out-of-map cells read as obstacles and as unreachable.
struct Observation {
  int fov = 0;
  ChannelGrid agents;
  ChannelGrid obstacles;
  std::array<ChannelGrid, 4> heuristic;
};

inline constexpr int kDefaultFov = 9;

// fov must be odd (throws std::invalid_argument otherwise).
Observation observe(const WorldState& state, int agent, int fov = kDefaultFov);

// Same, with a caller-supplied distance field for the agent's goal (avoids
// recomputing the BFS per call).
Observation observe(const WorldState& state, int agent, int fov, const DistanceField& field);

}  // namespace mapf
