#include "qkr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qkr/errors.hpp"

namespace qkr {

namespace {

constexpr double kArmijoSlope = 1e-4;
constexpr double kMinStep = 1e-14;
constexpr double kMaxStep = 1e3;

void check_shapes(const PureState& state, const OutcomePartition& partition) {
  if (state.n != partition.spec.n || state.m != partition.spec.m ||
      state.dim() != partition.dim()) {
    throw InputError("state shape does not match partition");
  }
}

// Flat list of basis indices where `player` wins; the payoff objective sums
// probability mass over exactly these.
std::vector<std::size_t> winning_indices(const OutcomePartition& partition, int player) {
  std::vector<std::size_t> indices;
  for (std::size_t k = 0; k < partition.dim(); ++k) {
    const auto& w = partition.winners_by_index[k];
    if (std::binary_search(w.begin(), w.end(), player)) {
      indices.push_back(k);
    }
  }
  return indices;
}

double mass_on(const std::vector<Complex>& amps, const std::vector<std::size_t>& indices) {
  double total = 0.0;
  for (const std::size_t k : indices) {
    total += std::norm(amps[k]);
  }
  return total;
}

// Single gradient-ascent run: central-difference gradient, backtracking line
// search with an adaptive initial step carried across iterations.
AscentOutcome ascend(const Objective& objective, std::vector<double> x,
                     const OptimizerConfig& config) {
  const std::size_t dim = x.size();
  double fx = objective(x);
  std::vector<double> grad(dim);
  std::vector<double> trial(dim);
  double carry_step = 0.5;
  const double h = config.fd_step;

  int iter = 0;
  bool converged = false;
  while (iter < config.max_iters) {
    ++iter;
    double gnorm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double xi = x[i];
      x[i] = xi + h;
      const double fp = objective(x);
      x[i] = xi - h;
      const double fm = objective(x);
      x[i] = xi;
      grad[i] = (fp - fm) / (2.0 * h);
      gnorm2 += grad[i] * grad[i];
    }
    if (gnorm2 == 0.0) {
      converged = true;
      break;
    }

    double t = std::min(carry_step * 4.0, kMaxStep);
    bool accepted = false;
    double ft = fx;
    while (t >= kMinStep) {
      for (std::size_t i = 0; i < dim; ++i) {
        trial[i] = x[i] + t * grad[i];
      }
      ft = objective(trial);
      // Compare the difference so a sub-ulp Armijo margin cannot be
      // absorbed into fx and accept zero-progress steps.
      if (ft > fx && ft - fx >= kArmijoSlope * t * gnorm2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      // No ascent direction at finite-difference resolution.
      converged = true;
      break;
    }

    const double step_norm = t * std::sqrt(gnorm2);
    const double value_delta = ft - fx;
    x.swap(trial);
    fx = ft;
    carry_step = t;
    if (step_norm < config.step_tolerance && value_delta < config.value_tolerance) {
      converged = true;
      break;
    }
  }
  return AscentOutcome{std::move(x), fx, iter, converged};
}

}  // namespace

void validate(const OptimizerConfig& config) {
  if (config.restarts < 1) {
    throw InputError("restarts must be at least 1");
  }
  if (config.max_iters < 1) {
    throw InputError("max_iters must be at least 1");
  }
  if (!(config.step_tolerance > 0.0) || !(config.value_tolerance > 0.0)) {
    throw InputError("tolerances must be positive");
  }
  if (!(config.fd_step > 0.0)) {
    throw InputError("fd_step must be positive");
  }
}

AscentOutcome maximize_multistart(const Objective& objective, const StartDraw& draw_start,
                                  const OptimizerConfig& config) {
  validate(config);
  AscentOutcome best;
  bool have_best = false;
  for (int r = 0; r < config.restarts; ++r) {
    AscentOutcome outcome = ascend(objective, draw_start(r), config);
    if (!have_best || outcome.value > best.value) {
      best = std::move(outcome);
      have_best = true;
    }
  }
  return best;
}

double symmetric_payoff(const SquareMatrix& u, const PureState& initial,
                        const OutcomePartition& partition) {
  check_shapes(initial, partition);
  if (u.dim() != initial.m) {
    throw InputError("unitary dimension does not match choice count");
  }
  const std::vector<SquareMatrix> ops(static_cast<std::size_t>(initial.n), u);
  const PureState final_state = apply_local(initial, ops);
  return expected_payoff(final_state, 1, partition);
}

OptimizationResult optimize_symmetric(const PureState& initial, const OutcomePartition& partition,
                                      const OptimizerConfig& config) {
  check_shapes(initial, partition);
  const int n = initial.n;
  const int m = initial.m;
  const GeneratorBasis basis = generator_basis(m);
  const std::vector<std::size_t> wins = winning_indices(partition, 1);

  std::vector<Complex> scratch(initial.dim());
  UnitaryParams params;
  params.m = m;
  params.coeffs.resize(static_cast<std::size_t>(m) * m - 1);
  const Objective objective = [&](std::span<const double> coeffs) {
    std::copy(coeffs.begin(), coeffs.end(), params.coeffs.begin());
    const SquareMatrix u = unitary_from_params(params, basis);
    scratch = initial.amps;
    for (int axis = 0; axis < n; ++axis) {
      apply_one_local(scratch, n, m, axis, u);
    }
    return mass_on(scratch, wins);
  };
  const StartDraw draw = [&](int restart) {
    return random_params(mix_seed(config.seed, static_cast<std::uint64_t>(restart)), m, 1.0).coeffs;
  };

  AscentOutcome best = maximize_multistart(objective, draw, config);

  OptimizationResult result;
  result.best_params = UnitaryParams{m, best.params};
  result.best_unitary = unitary_from_params(result.best_params, basis);
  result.payoff = best.value;
  result.iterations_used = best.iterations;
  result.restarts_used = config.restarts;
  result.converged = best.converged;
  return result;
}

OptimizationResult best_response(const PureState& initial, const SquareMatrix& fixed, int player,
                                 const OutcomePartition& partition, const OptimizerConfig& config) {
  check_shapes(initial, partition);
  const int n = initial.n;
  const int m = initial.m;
  if (fixed.dim() != m) {
    throw InputError("fixed strategy dimension does not match choice count");
  }
  if (player < 1 || player > n) {
    throw InputError("player index " + std::to_string(player) + " out of range [1, " +
                     std::to_string(n) + "]");
  }
  const int deviator_axis = player - 1;
  const GeneratorBasis basis = generator_basis(m);
  const std::vector<std::size_t> wins = winning_indices(partition, player);

  // Everyone else's fixed strategy commutes with the deviator's; apply it once.
  std::vector<Complex> held = initial.amps;
  for (int axis = 0; axis < n; ++axis) {
    if (axis != deviator_axis) {
      apply_one_local(held, n, m, axis, fixed);
    }
  }

  std::vector<Complex> scratch(initial.dim());
  UnitaryParams params;
  params.m = m;
  params.coeffs.resize(static_cast<std::size_t>(m) * m - 1);
  const Objective objective = [&](std::span<const double> coeffs) {
    std::copy(coeffs.begin(), coeffs.end(), params.coeffs.begin());
    const SquareMatrix u = unitary_from_params(params, basis);
    scratch = held;
    apply_one_local(scratch, n, m, deviator_axis, u);
    return mass_on(scratch, wins);
  };
  const StartDraw draw = [&](int restart) {
    return random_params(mix_seed(config.seed, static_cast<std::uint64_t>(restart)), m, 1.0).coeffs;
  };

  AscentOutcome best = maximize_multistart(objective, draw, config);

  OptimizationResult result;
  result.best_params = UnitaryParams{m, best.params};
  result.best_unitary = unitary_from_params(result.best_params, basis);
  result.payoff = best.value;
  result.iterations_used = best.iterations;
  result.restarts_used = config.restarts;
  result.converged = best.converged;
  return result;
}

double nash_gap(const PureState& initial, const SquareMatrix& u, const OutcomePartition& partition,
                const OptimizerConfig& config) {
  const double symmetric = symmetric_payoff(u, initial, partition);
  const OptimizationResult deviation = best_response(initial, u, 1, partition, config);
  return deviation.payoff - symmetric;
}

}  // namespace qkr
