#pragma once

#include <string>
#include <vector>

#include "mapf/inference.hpp"

namespace mapf {

// One portfolio member.
struct SolverConfig {
  std::string label;
  AStarKind tau = AStarKind::Static;
  int rho = 3;
  SolverToggles toggles;

  StepContext context() const { return StepContext{tau, rho, toggles}; }

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct Solution {
  std::string instance_id;
  std::string config_label;
  std::vector<std::vector<Action>> actions;  // one joint action per step
  int makespan = 0;                          // steps until all agents on goals; max_steps on failure
  bool success = false;
  std::vector<int> goal_reach_times;         // settle step per agent, -1 if off goal at the end
  int agents_on_goal_end = 0;
};

// Rolls one episode with solver_step until every agent is on its goal or
// the budget runs out. Budget exhaustion is a failed Solution with
// makespan = max_steps, not an error.
Solution run_solver(const Instance& instance, const SolverConfig& cfg, const QProvider& provider);

struct MemberOutcome {
  std::string label;
  int makespan = 0;
  bool success = false;
  int agents_on_goal_end = 0;
};

struct EnsembleResult {
  Solution best;
  std::vector<MemberOutcome> members;  // in config order
};

// Runs every member (in parallel when jobs > 1; results are independent of
// scheduling) and keeps the lowest-makespan success, ties to the earlier
// config. When every member fails, returns the failed Solution with the
// most agents on goal at budget end, ties again to list order. Throws
// std::invalid_argument on an empty portfolio.
EnsembleResult run_ensemble_detailed(const Instance& instance,
                                     const std::vector<SolverConfig>& configs,
                                     const QProvider& provider, int jobs = 1);

Solution run_ensemble(const Instance& instance, const std::vector<SolverConfig>& configs,
                      const QProvider& provider, int jobs = 1);

enum class PortfolioKind { Random, Structured };

// The benchmark portfolios: tau x rho over {0,1,2} x {2,3,4,5} for random
// maps and {0,1,2} x {3,4} for structured ones, each pair once with all
// strategies on and once with the value-based priority decisions
// (resolution + escape) off. 24 and 12 members respectively.
std::vector<SolverConfig> default_configs(PortfolioKind kind);

struct MetricsReport {
  int count = 0;
  double success_rate = 0.0;
  double mean_makespan = 0.0;  // failures contribute their max_steps
};

// Success rate and mean episode length over one Solution per instance.
// Throws std::invalid_argument on empty input.
MetricsReport metrics(const std::vector<Solution>& solutions);

}  // namespace mapf
