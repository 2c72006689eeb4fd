#include "qkr/qstate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qkr/errors.hpp"

namespace qkr {

namespace {

// m^n checked against the dimension cap.
std::size_t checked_dim(int n, int m) {
  if (n < 2) {
    throw InputError("player count must be at least 2");
  }
  if (m < 2) {
    throw InputError("choice count must be at least 2");
  }
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(m);
    if (dim > kDimensionCap) {
      throw InputError("state dimension m^n exceeds cap of " + std::to_string(kDimensionCap));
    }
  }
  return dim;
}

void check_choices(std::span<const int> choices, int m) {
  if (m < 2) {
    throw InputError("choice count must be at least 2");
  }
  for (const int c : choices) {
    if (c < 0 || c >= m) {
      throw InputError("choice " + std::to_string(c) + " out of range [0, " + std::to_string(m) + ")");
    }
  }
}

}  // namespace

double PureState::norm() const {
  double sum = 0.0;
  for (const auto& a : amps) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

std::size_t basis_index(std::span<const int> choices, int m) {
  if (choices.empty()) {
    throw InputError("choice list is empty");
  }
  check_choices(choices, m);
  std::size_t index = 0;
  for (const int c : choices) {
    index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(c);
  }
  return index;
}

std::vector<int> decode_index(std::size_t index, int n, int m) {
  const std::size_t dim = checked_dim(n, m);
  if (index >= dim) {
    throw InputError("basis index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(dim) + ")");
  }
  std::vector<int> choices(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    choices[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(m));
    index /= static_cast<std::size_t>(m);
  }
  return choices;
}

PureState basis_state(std::span<const int> choices, int m) {
  const int n = static_cast<int>(choices.size());
  const std::size_t dim = checked_dim(n, m);
  PureState state{n, m, std::vector<Complex>(dim, Complex{0.0, 0.0})};
  state.amps[basis_index(choices, m)] = Complex{1.0, 0.0};
  return state;
}

PureState superpose(std::span<const WeightedChoice> terms, int m) {
  if (terms.empty()) {
    throw InputError("superpose needs at least one term");
  }
  const int n = static_cast<int>(terms.front().choices.size());
  const std::size_t dim = checked_dim(n, m);
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  for (const auto& term : terms) {
    if (static_cast<int>(term.choices.size()) != n) {
      throw InputError("superpose terms disagree on player count");
    }
    amps[basis_index(term.choices, m)] += term.weight;
  }
  double norm2 = 0.0;
  for (const auto& a : amps) {
    norm2 += std::norm(a);
  }
  if (norm2 < 1e-30) {
    throw InputError("superpose weights cancel to the zero vector");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) {
    a *= inv;
  }
  return PureState{n, m, std::move(amps)};
}

PureState make_state(int n, int m, std::vector<Complex> amps) {
  const std::size_t dim = checked_dim(n, m);
  if (amps.size() != dim) {
    throw InputError("amplitude vector length " + std::to_string(amps.size()) +
                     " does not match m^n = " + std::to_string(dim));
  }
  double norm2 = 0.0;
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InputError("amplitude vector contains a non-finite value");
    }
    norm2 += std::norm(a);
  }
  const double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw InputError("state norm " + std::to_string(norm) + " is not 1");
  }
  const double inv = 1.0 / norm;
  for (auto& a : amps) {
    a *= inv;
  }
  return PureState{n, m, std::move(amps)};
}

void apply_one_local(std::span<Complex> amps, int n, int m, int axis, const SquareMatrix& op) {
  if (axis < 0 || axis >= n) {
    throw InputError("player axis out of range");
  }
  if (op.dim() != m) {
    throw InputError("operator dimension does not match choice count");
  }
  if (m > 64) {
    throw InputError("choice count exceeds supported maximum of 64");
  }
  const std::size_t dim = amps.size();
  // stride of this axis's digit: m^(n-1-axis)
  std::size_t stride = 1;
  for (int i = 0; i < n - 1 - axis; ++i) {
    stride *= static_cast<std::size_t>(m);
  }
  Complex gathered[64];
  const std::size_t block = stride * static_cast<std::size_t>(m);
  for (std::size_t outer = 0; outer < dim; outer += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t base = outer + inner;
      for (int j = 0; j < m; ++j) {
        gathered[j] = amps[base + static_cast<std::size_t>(j) * stride];
      }
      for (int i = 0; i < m; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
          acc += op(i, j) * gathered[j];
        }
        amps[base + static_cast<std::size_t>(i) * stride] = acc;
      }
    }
  }
}

void apply_local_raw(std::span<Complex> amps, int n, int m, std::span<const SquareMatrix> ops) {
  if (static_cast<int>(ops.size()) != n) {
    throw InputError("need one operator per player");
  }
  for (int axis = 0; axis < n; ++axis) {
    apply_one_local(amps, n, m, axis, ops[static_cast<std::size_t>(axis)]);
  }
}

PureState apply_local(const PureState& state, std::span<const SquareMatrix> ops) {
  PureState out = state;
  apply_local_raw(out.amps, state.n, state.m, ops);
  return out;
}

double probability(const PureState& state, std::size_t index) {
  if (index >= state.dim()) {
    throw InputError("basis index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(state.dim()) + ")");
  }
  return std::norm(state.amps[index]);
}

}  // namespace qkr
