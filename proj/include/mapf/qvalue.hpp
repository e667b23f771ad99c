#pragma once

#include <array>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "mapf/distance_field.hpp"
#include "mapf/world.hpp"

namespace mapf {

// One agent's action values, indexed by the global action order
// [Stay, Up, Down, Left, Right]. -inf marks a masked action.
using QRow = std::array<double, kActionCount>;
using QMatrix = std::vector<QRow>;

inline constexpr double kMaskedQ = -std::numeric_limits<double>::infinity();

inline double q_of(const QRow& row, Action a) { return row[static_cast<int>(a)]; }

// Argmax with deterministic ties (lowest action index wins). A fully masked
// row falls back to Stay.
Action argmax_action(const QRow& row);

// Dueling decomposition: Q_a = val + adv_a - mean(adv).
struct DuelingHead {
  double val = 0.0;
  std::array<double, kActionCount> adv{};
};

QRow dueling_q(const DuelingHead& head);

// Discounted n-step return: sum_k gamma^k r_{t+k} + gamma^n * bootstrap,
// with n = rewards.size(). Empty rewards returns the bootstrap.
double n_step_return(std::span<const double> rewards, double gamma, double bootstrap);

// Mean squared error between returns and taken-action Q values. Throws
// std::invalid_argument on empty or mismatched inputs.
double td_loss(std::span<const double> returns, std::span<const double> q_taken);

// Produces one agent's Q row for a state. Implementations are deterministic
// and safe to share read-only across parallel solvers.
class QProvider {
 public:
  virtual ~QProvider() = default;
  virtual QRow q_values(const WorldState& state, int agent) const = 0;
};

// Training-free provider: Q_a = -(BFS distance-to-goal of the landing cell)
// on the static map; actions leading out of bounds, into a static obstacle,
// or onto an unreachable cell are masked. Stay on the goal scores 0, the
// row maximum. Scale note: values are comparable across agents as
// "closer to goal wins".
class DistanceQProvider : public QProvider {
 public:
  explicit DistanceQProvider(const Instance& instance);

  QRow q_values(const WorldState& state, int agent) const override;

  const DistanceField& field(int agent) const { return fields_[agent]; }

 private:
  std::vector<DistanceField> fields_;
};

// Free-function form of the distance provider (same rule).
QRow distance_q(const WorldState& state, int agent, std::span<const DistanceField> fields);

}  // namespace mapf
