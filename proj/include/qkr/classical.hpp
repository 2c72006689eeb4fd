#ifndef QKR_CLASSICAL_HPP
#define QKR_CLASSICAL_HPP

#include <span>
#include <vector>

#include "qkr/game.hpp"

namespace qkr {

// Probability distribution over a player's m choices.
struct MixedStrategy {
  std::vector<double> probs;
};

void validate(const MixedStrategy& strategy, int m);

// Exact per-player expected payoffs by enumerating all m^n outcomes.
std::vector<double> mixed_payoff(std::span<const MixedStrategy> strategies, const GameSpec& spec);

// Player 1's payoff when everyone randomizes uniformly; (1 - 1/m)^2 for n=3.
double uniform_baseline(const GameSpec& spec);

struct SymmetricClassicalResult {
  MixedStrategy strategy;
  double value = 0.0;
};

// Best common payoff over symmetric mixed profiles: simplex grid search at
// the given resolution, then shrinking-grid refinement around the winner.
SymmetricClassicalResult best_symmetric_classical(const GameSpec& spec, int grid_resolution);

}  // namespace qkr

#endif
