#ifndef QKR_SU_PARAM_HPP
#define QKR_SU_PARAM_HPP

#include <cstdint>
#include <vector>

#include "qkr/matrix.hpp"

namespace qkr {

// Real coefficients over the traceless Hermitian generator basis of SU(m);
// length m^2 - 1.
struct UnitaryParams {
  int m = 0;
  std::vector<double> coeffs;
};

// Generalized Gell-Mann basis: all symmetric pair generators (row-major pair
// order), then all antisymmetric ones, then the m-1 diagonal generators.
// Normalized so Tr(T_a T_b) = 2 delta_ab.
struct GeneratorBasis {
  int m = 0;
  std::vector<SquareMatrix> matrices;
};

GeneratorBasis generator_basis(int m);  // 2 <= m <= 8

// U = exp(i sum_a coeffs[a] T_a); unitary with det 1.
SquareMatrix unitary_from_params(const UnitaryParams& params, const GeneratorBasis& basis);

// exp(A) by scaling-and-squaring with a truncated Taylor core.
SquareMatrix matrix_exp(const SquareMatrix& a);

// Discrete Fourier gate: F[j][k] = omega^(jk)/sqrt(m), omega = exp(2*pi*i/m).
SquareMatrix fourier_gate(int m);

// Deterministic draw of m^2-1 coefficients, uniform in [-scale*pi, scale*pi].
UnitaryParams random_params(std::uint64_t seed, int m, double scale);

// Deterministic seed derivation for restart / grid-cell streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace qkr

#endif
