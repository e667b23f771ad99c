#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mapf/instance.hpp"

namespace mapf {

enum class ConflictKind : std::uint8_t { Vertex, Edge, Obstacle, OutOfBound };

struct Conflict {
  ConflictKind kind;
  // Sorted ascending. Vertex: every agent proposing the cell (>= 2);
  // Edge: exactly two; Obstacle/OutOfBound: one.
  std::vector<int> agents;
  // Vertex/Obstacle/OutOfBound: the offending landing cell.
  Position cell{};
  // Edge only: the traversed edge as seen by agents[0] (from, to).
  std::pair<Position, Position> edge{};

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

// All conflicts in the joint move prev -> proposed: OutOfBound, Obstacle,
// Vertex (same landing cell), Edge (two agents swapping adjacent cells).
// Empty result iff the move is valid. prev must be a valid configuration.
std::vector<Conflict> detect_conflicts(const std::vector<Position>& prev,
                                       const std::vector<Position>& proposed,
                                       const GridMap& map);

// Per-agent last-5-positions ring buffer, newest first: at(0) = v^t.
class PositionHistory {
 public:
  static constexpr int kDepth = 5;

  void push(Position p) {
    for (int k = (count_ < kDepth ? count_ : kDepth - 1); k > 0; --k) ring_[k] = ring_[k - 1];
    ring_[0] = p;
    if (count_ < kDepth) ++count_;
  }

  int size() const { return count_; }
  Position at(int steps_back) const { return ring_[steps_back]; }

 private:
  std::array<Position, kDepth> ring_{};
  int count_ = 0;
};

struct WorldState {
  const Instance* instance = nullptr;
  std::vector<Position> positions;
  std::vector<PositionHistory> history;
  int timestep = 0;

  const GridMap& map() const { return instance->map; }
  const std::vector<Position>& goals() const { return instance->goals; }
  int agent_count() const { return static_cast<int>(positions.size()); }
  bool on_goal(int agent) const { return positions[agent] == instance->goals[agent]; }
};

// The instance must outlive the state.
WorldState make_world(const Instance& instance);

bool all_on_goals(const WorldState& state);
bool is_done(const WorldState& state);
int agents_on_goal(const WorldState& state);

// Table-derived per-step reward.
// Precedence: collision, then reaching the goal by a move, then resting on
// the goal, then the default move/stay-off-goal penalty.
double reward_of(bool moved, bool on_goal_after, bool collided, bool reached_goal_now);

struct StepResult {
  std::vector<double> rewards;
  bool done = false;
};

// Advances one timestep. Agents involved in any conflict are frozen at
// their previous cell (iterated to a fixed point, so a move into a newly
// frozen agent freezes too) and receive the collision reward. Throws
// std::logic_error when the episode is already done.
StepResult step(WorldState& state, const std::vector<Action>& joint);

}  // namespace mapf
