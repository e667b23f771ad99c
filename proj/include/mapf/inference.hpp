#pragma once

#include <optional>
#include <vector>

#include "mapf/astar.hpp"
#include "mapf/qvalue.hpp"

namespace mapf {

struct SolverToggles {
  bool priority_resolution = true;
  bool escape_policy = true;
  bool hybrid_guidance = true;

  friend bool operator==(const SolverToggles&, const SolverToggles&) = default;
};

// Per-step decision settings: expert-path type, live-agent visibility
// radius (Chebyshev; the square has side 2*rho+1), and strategy toggles.
struct StepContext {
  AStarKind tau = AStarKind::Static;
  int rho = 3;
  SolverToggles toggles;
};

// Masks move actions that land out of bounds or on a map obstacle. Stay is
// never masked here.
QRow mask_static(QRow row, const GridMap& map, Position pos);

// Literal Alg.-1 mask: every action (Stay included) whose landing cell is
// out of bounds or marked on `map` goes to -inf. Used with working maps
// where claimed cells count as obstacles.
QRow mask_blocked(QRow row, const GridMap& map, Position pos);

// True iff some other agent that is off its goal sits within Chebyshev
// distance rho of agent i.
bool live_agents_nearby(const WorldState& state, int i, int rho);

// Expert guidance for agents with no live neighbors: the first action of
// the tau-path to the goal, Stay when already there, nullopt when a live
// agent is nearby or no path exists.
std::optional<Action> hybrid_select(const WorldState& state, int i, const StepContext& ctx);

// Q-value-prioritized conflict resolution. In each conflict group the
// highest-priority agent keeps its action and the rest mask theirs and
// re-choose; an agent proposing Stay is never displaced (movers around it
// re-choose instead). priorities defaults to each agent's chosen-action Q;
// re-chosen agents always fall back to that. Returns a conflict-free joint
// action; an exhausted row takes Stay.
std::vector<Action> prioritized_resolution(const WorldState& state, const QMatrix& q,
                                           std::vector<Action> proposed,
                                           const std::vector<double>* priorities = nullptr);

// Oscillation test on the 5-deep history: v^{t-1} = v^{t-3} and
// v^{t-2} = v^{t-4}. False until five positions have been recorded.
bool has_deadlock_history(const PositionHistory& history);

struct EscapeResult {
  std::vector<Action> actions;
  std::vector<std::uint8_t> redecided;  // 1 where the deadlock branch replaced the action
};

// Advanced escape policy: initial actions by argmax Q, agents processed in
// descending chosen-Q order over a working map copy; an active, deadlocked
// agent takes the first tau-path action if one exists on the working map,
// else the argmax of its fully blocked-masked row; every agent claims its
// landing cell before the next one is processed.
EscapeResult advanced_escape(const WorldState& state, const QMatrix& q, AStarKind tau);

// Freezes agents involved in conflicts to Stay, iterated to a fixed point.
// The no-priority fallback; same rule the environment applies.
std::vector<Action> freeze_conflicts(const WorldState& state, std::vector<Action> proposed);

// One full decision step: provider Q -> static mask -> greedy proposals ->
// hybrid overrides -> escape overrides -> conflict resolution (or freeze).
// The result is always conflict-free from the given state.
std::vector<Action> solver_step(const WorldState& state, const StepContext& ctx,
                                const QProvider& provider);

}  // namespace mapf
