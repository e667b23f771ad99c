#pragma once

#include <cstdint>
#include <string>

#include "mapf/qvalue.hpp"

namespace mapf {

struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.05;
  int decay_steps = 25000;

  double at(int step) const {
    if (decay_steps <= 0 || step >= decay_steps) return end;
    return start + (end - start) * (static_cast<double>(step) / decay_steps);
  }
};

struct LearnerConfig {
  double gamma = 0.99;
  int n = 1;                    // return horizon
  double alpha = 0.1;           // learning rate
  EpsilonSchedule epsilon;
  int target_sync = 250;        // env steps between target-table syncs
};

// Learned per-cell dueling heads for one (map, goal). Q rows index the
// querying agent's own cell, so the table doubles as a provider on
// multi-agent states over the same map.
class TabularQProvider : public QProvider {
 public:
  TabularQProvider(GridMap map, Position goal, std::vector<DuelingHead> table);

  QRow q_values(const WorldState& state, int agent) const override;

  QRow q_at(Position p) const;
  Action greedy_action(Position p) const { return argmax_action(q_at(p)); }

  const GridMap& map() const { return map_; }
  Position goal() const { return goal_; }
  const std::vector<DuelingHead>& table() const { return table_; }

 private:
  GridMap map_;
  Position goal_{};
  std::vector<DuelingHead> table_;
};

// Desk-scale single-agent learner: epsilon-greedy episodes on the real
// environment, dueling-head updates toward n-step returns, action selection
// by the online table with evaluation by a target copy synced every
// cfg.target_sync steps. Runs exactly train_steps env steps (episodes are
// capped at 4*w*h steps), deterministic for a fixed seed. Map must be small
// (<= 10x10) and the goal a free cell.
TabularQProvider tabular_train(const GridMap& map, Position goal, const LearnerConfig& cfg,
                               int train_steps, std::uint64_t seed);

}  // namespace mapf
