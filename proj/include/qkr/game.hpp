#ifndef QKR_GAME_HPP
#define QKR_GAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qkr/qstate.hpp"

namespace qkr {

// Unique-choice game: n players, m choices, payoff 1 to every player whose
// choice nobody else picked, 0 otherwise. The payoff values are fixed.
struct GameSpec {
  int n = 3;
  int m = 3;
  double win_payoff = 1.0;
  double lose_payoff = 0.0;
};

// Throws InputError unless n >= 2, m >= 2 and m^n fits the dimension cap.
void validate(const GameSpec& spec);

// Outcome classes for the three-player, three-choice game: L nobody wins,
// G everybody wins, D_i only player i wins.
enum class OutcomeClass : std::uint8_t { L, G, D1, D2, D3 };

const char* to_string(OutcomeClass cls);

struct OutcomePartition {
  GameSpec spec;
  // Sorted 1-based player ids winning at each basis outcome.
  std::vector<std::vector<int>> winners_by_index;
  // Five-class labels; populated only for n = m = 3.
  std::vector<OutcomeClass> classes;

  bool has_classes() const { return !classes.empty(); }
  std::size_t dim() const { return winners_by_index.size(); }
};

// Players (1-based) whose choice appears exactly once in the outcome.
std::vector<int> winners(std::span<const int> choices);

OutcomePartition build_partition(const GameSpec& spec);

// Probability mass on outcomes where `player` (1-based) wins.
double expected_payoff(const PureState& state, int player, const OutcomePartition& partition);

struct ClassProbabilities {
  double p_l = 0.0;
  double p_g = 0.0;
  double p_d1 = 0.0;
  double p_d2 = 0.0;
  double p_d3 = 0.0;
};

// Mass per outcome class; requires the n = m = 3 partition.
ClassProbabilities class_probabilities(const PureState& state, const OutcomePartition& partition);

}  // namespace qkr

#endif
