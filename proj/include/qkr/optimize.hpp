#ifndef QKR_OPTIMIZE_HPP
#define QKR_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qkr/game.hpp"
#include "qkr/qstate.hpp"
#include "qkr/su_param.hpp"

namespace qkr {

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 2000;
  double step_tolerance = 1e-9;
  double value_tolerance = 1e-10;
  std::uint64_t seed = 1;
  double fd_step = 1e-6;
};

void validate(const OptimizerConfig& config);

struct OptimizationResult {
  UnitaryParams best_params;
  SquareMatrix best_unitary;
  double payoff = 0.0;
  int iterations_used = 0;  // iterations of the winning restart
  int restarts_used = 0;
  bool converged = false;
};

// Payoff of player 1 when every player applies `u` to `initial`. For
// permutation-symmetric initial states this equals every player's payoff.
double symmetric_payoff(const SquareMatrix& u, const PureState& initial,
                        const OutcomePartition& partition);

// Multi-start finite-difference gradient ascent over the shared-strategy
// parameter space. Deterministic for a fixed config seed.
OptimizationResult optimize_symmetric(const PureState& initial, const OutcomePartition& partition,
                                      const OptimizerConfig& config);

// Best unilateral deviation for `player` (1-based) while everyone else
// holds `fixed`.
OptimizationResult best_response(const PureState& initial, const SquareMatrix& fixed, int player,
                                 const OutcomePartition& partition, const OptimizerConfig& config);

// Best-response payoff of player 1 minus the symmetric payoff of `u`.
// Nonnegative up to optimizer tolerance; ~0 certifies a Nash equilibrium.
double nash_gap(const PureState& initial, const SquareMatrix& u, const OutcomePartition& partition,
                const OptimizerConfig& config);

// Generic engine behind the wrappers above, exposed for direct use in tests.
struct AscentOutcome {
  std::vector<double> params;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;
using StartDraw = std::function<std::vector<double>(int restart_index)>;

AscentOutcome maximize_multistart(const Objective& objective, const StartDraw& draw_start,
                                  const OptimizerConfig& config);

}  // namespace qkr

#endif
