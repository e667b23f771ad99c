#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapf/core.hpp"

namespace mapf {

// One MAPF problem: a map, per-agent start/goal cells, and a step budget.
// Starts and goals all lie on free cells and the 2m cells are pairwise
// distinct. validate() enforces both.
struct Instance {
  std::string id;
  GridMap map;
  std::vector<Position> starts;
  std::vector<Position> goals;
  int max_steps = 256;

  int agent_count() const { return static_cast<int>(starts.size()); }
};

// Throws std::invalid_argument naming the first violated invariant.
void validate_instance(const Instance& instance);

// Step-budget convention for benchmark maps: 256 up to 40x40 (and den312d),
// 386 up to 80x80, 512 beyond (warehouse).
int default_max_steps(int width, int height, const std::string& map_name = "");

// Random instance: obstacles drawn i.i.d. at `density`, starts/goals drawn
// among the free cells with no overlap, every start-goal pair BFS-connected
// on the obstacle-only map. Resamples the whole draw up to 100 times before
// throwing std::runtime_error. Deterministic for a fixed seed.
Instance generate_instance(int width, int height, double density, int agents,
                           std::uint64_t seed);

}  // namespace mapf
