#ifndef QKR_TESTS_ORACLES_HPP
#define QKR_TESTS_ORACLES_HPP

// Independent reference implementations used only by tests. Everything here
// recomputes results along a different path than the library (dense
// matrices, plain series, multiplicity counting) so the two sides can
// cross-check each other.

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qkr/matrix.hpp"
#include "qkr/qstate.hpp"

namespace oracles {

using qkr::Complex;
using qkr::PureState;
using qkr::SquareMatrix;

// Deterministic RNG kept separate from the library's generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

inline double gaussian(std::uint64_t& state) {
  // Box-Muller; u clamped away from 0.
  const double u = std::max(unit_double(state), 1e-300);
  const double v = unit_double(state);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

// Haar-ish random normalized amplitude vector.
inline PureState random_state(std::uint64_t seed, int n, int m) {
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(m);
  }
  std::uint64_t state = seed;
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = Complex{gaussian(state), gaussian(state)};
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) {
    a *= inv;
  }
  return PureState{n, m, std::move(amps)};
}

// Random GHZ-family state with real nonnegative weights.
inline PureState random_span_l_state(std::uint64_t seed, double* alpha_out = nullptr,
                                     double* beta_out = nullptr, double* gamma_out = nullptr) {
  std::uint64_t state = seed;
  double w[3];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : w) {
      x = unit_double(state);
      norm2 += x * x;
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : w) {
    x *= inv;
  }
  if (alpha_out != nullptr) *alpha_out = w[0];
  if (beta_out != nullptr) *beta_out = w[1];
  if (gamma_out != nullptr) *gamma_out = w[2];
  std::vector<Complex> amps(27, Complex{0.0, 0.0});
  amps[0] = Complex{w[0], 0.0};
  amps[13] = Complex{w[1], 0.0};
  amps[26] = Complex{w[2], 0.0};
  return PureState{3, 3, std::move(amps)};
}

// Dense Kronecker product of per-player operators, player 1 most
// significant. Reference path for apply_local.
inline std::vector<std::vector<Complex>> kron_full(std::span<const SquareMatrix> ops) {
  std::vector<std::vector<Complex>> full{{Complex{1.0, 0.0}}};
  for (const auto& op : ops) {
    const std::size_t rows = full.size();
    const std::size_t m = static_cast<std::size_t>(op.dim());
    // full (earlier players, higher digits) paired with op's digit below it.
    std::vector<std::vector<Complex>> next(rows * m, std::vector<Complex>(rows * m));
    for (std::size_t r = 0; r < rows * m; ++r) {
      for (std::size_t c = 0; c < rows * m; ++c) {
        next[r][c] = full[r / m][c / m] * op(static_cast<int>(r % m), static_cast<int>(c % m));
      }
    }
    full = std::move(next);
  }
  return full;
}

inline std::vector<Complex> dense_apply(const std::vector<std::vector<Complex>>& matrix,
                                        std::span<const Complex> vec) {
  std::vector<Complex> out(matrix.size(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    for (std::size_t c = 0; c < vec.size(); ++c) {
      out[r] += matrix[r][c] * vec[c];
    }
  }
  return out;
}

// Plain truncated Taylor series, no scaling tricks.
inline SquareMatrix taylor_exp(const SquareMatrix& a, int terms) {
  SquareMatrix sum = SquareMatrix::identity(a.dim());
  SquareMatrix term = SquareMatrix::identity(a.dim());
  for (int k = 1; k <= terms; ++k) {
    term = term * a;
    term *= Complex{1.0 / k, 0.0};
    sum += term;
  }
  return sum;
}

// Winner recount from explicit choice multiplicities.
inline std::vector<int> recount_winners(std::span<const int> choices) {
  std::map<int, int> counts;
  for (const int c : choices) {
    ++counts[c];
  }
  std::vector<int> result;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (counts[choices[i]] == 1) {
      result.push_back(static_cast<int>(i) + 1);
    }
  }
  return result;
}

// Payoff of the Fourier strategy on alpha|000> + beta|111> + gamma|222>,
// derived by expanding F x F x F analytically.
inline double fourier_closed_form(double alpha, double beta, double gamma) {
  const double s = alpha + beta + gamma;
  return 1.0 / 3.0 + s * s / 9.0;
}

// Relabels player positions: digit of player i moves to position perm[i]
// (0-based), and the state follows.
inline PureState permute_players(const PureState& state, std::span<const int> perm) {
  std::vector<Complex> amps(state.dim(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const std::vector<int> choices = qkr::decode_index(k, state.n, state.m);
    std::vector<int> moved(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) {
      moved[static_cast<std::size_t>(perm[i])] = choices[i];
    }
    amps[qkr::basis_index(moved, state.m)] = state.amps[k];
  }
  return PureState{state.n, state.m, std::move(amps)};
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace oracles

#endif
