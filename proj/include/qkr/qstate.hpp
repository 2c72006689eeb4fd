#ifndef QKR_QSTATE_HPP
#define QKR_QSTATE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qkr/matrix.hpp"

namespace qkr {

// Dense state vectors stay cheap up to this dimension; constructors reject
// anything larger.
inline constexpr std::size_t kDimensionCap = 4096;

// Norm drift beyond this indicates a bug or a non-unitary operator.
inline constexpr double kNormTolerance = 1e-12;

// Normalized pure state of n players with m choices each. amps has length
// m^n, indexed with player 1 as the most significant base-m digit.
struct PureState {
  int n = 0;
  int m = 0;
  std::vector<Complex> amps;

  std::size_t dim() const { return amps.size(); }
  double norm() const;
};

// Encodes per-player choices into a flat index: sum of choices[i] * m^(n-1-i).
std::size_t basis_index(std::span<const int> choices, int m);

// Inverse of basis_index over n base-m digits.
std::vector<int> decode_index(std::size_t index, int n, int m);

// Unit amplitude on one computational basis outcome.
PureState basis_state(std::span<const int> choices, int m);

struct WeightedChoice {
  std::vector<int> choices;
  Complex weight;
};

// Normalized weighted sum of basis outcomes. Weights landing on the same
// outcome accumulate; an all-cancelling combination is rejected.
PureState superpose(std::span<const WeightedChoice> terms, int m);

// Wraps a raw amplitude vector as a PureState. Rejects vectors whose norm is
// visibly wrong (> 1e-6 off), then renormalizes exactly.
PureState make_state(int n, int m, std::vector<Complex> amps);

// (U_1 x ... x U_n)|psi>, with ops[i] acting on the digit of player i+1.
// Does not renormalize: norm drift from non-unitary ops must stay visible.
PureState apply_local(const PureState& state, std::span<const SquareMatrix> ops);

// Same contraction on a raw amplitude vector (no normalization contract);
// linearity holds exactly here.
void apply_local_raw(std::span<Complex> amps, int n, int m, std::span<const SquareMatrix> ops);

// Applies one m x m operator to the digit of a single player (0-based axis).
void apply_one_local(std::span<Complex> amps, int n, int m, int axis, const SquareMatrix& op);

// Born probability |amps[index]|^2.
double probability(const PureState& state, std::size_t index);

}  // namespace qkr

#endif
