#include "qkr/game.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qkr/errors.hpp"

namespace qkr {

void validate(const GameSpec& spec) {
  if (spec.n < 2) {
    throw InputError("player count must be at least 2");
  }
  if (spec.m < 2) {
    throw InputError("choice count must be at least 2");
  }
  std::size_t dim = 1;
  for (int i = 0; i < spec.n; ++i) {
    dim *= static_cast<std::size_t>(spec.m);
    if (dim > kDimensionCap) {
      throw InputError("game dimension m^n exceeds cap of " + std::to_string(kDimensionCap));
    }
  }
}

const char* to_string(OutcomeClass cls) {
  switch (cls) {
    case OutcomeClass::L:
      return "L";
    case OutcomeClass::G:
      return "G";
    case OutcomeClass::D1:
      return "D1";
    case OutcomeClass::D2:
      return "D2";
    case OutcomeClass::D3:
      return "D3";
  }
  return "?";
}

std::vector<int> winners(std::span<const int> choices) {
  const int n = static_cast<int>(choices.size());
  if (n < 2) {
    throw InputError("need at least 2 players");
  }
  std::vector<int> result;
  for (int i = 0; i < n; ++i) {
    if (choices[static_cast<std::size_t>(i)] < 0) {
      throw InputError("choices must be nonnegative");
    }
    bool unique = true;
    for (int j = 0; j < n; ++j) {
      if (j != i && choices[static_cast<std::size_t>(j)] == choices[static_cast<std::size_t>(i)]) {
        unique = false;
        break;
      }
    }
    if (unique) {
      result.push_back(i + 1);
    }
  }
  return result;
}

OutcomePartition build_partition(const GameSpec& spec) {
  validate(spec);
  std::size_t dim = 1;
  for (int i = 0; i < spec.n; ++i) {
    dim *= static_cast<std::size_t>(spec.m);
  }
  OutcomePartition partition;
  partition.spec = spec;
  partition.winners_by_index.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    partition.winners_by_index.push_back(winners(decode_index(k, spec.n, spec.m)));
  }
  if (spec.n == 3 && spec.m == 3) {
    partition.classes.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto& w = partition.winners_by_index[k];
      if (w.empty()) {
        partition.classes[k] = OutcomeClass::L;
      } else if (w.size() == 3) {
        partition.classes[k] = OutcomeClass::G;
      } else {
        // Exactly one winner: with three players, two sharing a choice and
        // one apart, two-winner outcomes cannot occur.
        switch (w.front()) {
          case 1:
            partition.classes[k] = OutcomeClass::D1;
            break;
          case 2:
            partition.classes[k] = OutcomeClass::D2;
            break;
          default:
            partition.classes[k] = OutcomeClass::D3;
            break;
        }
      }
    }
  }
  return partition;
}

double expected_payoff(const PureState& state, int player, const OutcomePartition& partition) {
  if (state.dim() != partition.dim() || state.m != partition.spec.m) {
    throw InputError("state shape does not match partition");
  }
  if (player < 1 || player > partition.spec.n) {
    throw InputError("player index " + std::to_string(player) + " out of range [1, " +
                     std::to_string(partition.spec.n) + "]");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const auto& w = partition.winners_by_index[k];
    if (std::binary_search(w.begin(), w.end(), player)) {
      total += std::norm(state.amps[k]);
    }
  }
  return total;
}

ClassProbabilities class_probabilities(const PureState& state, const OutcomePartition& partition) {
  if (!partition.has_classes()) {
    throw UnsupportedShapeError("outcome classes exist only for n = 3, m = 3");
  }
  if (state.dim() != partition.dim() || state.m != partition.spec.m) {
    throw InputError("state shape does not match partition");
  }
  ClassProbabilities probs;
  std::array<double*, 5> slot = {&probs.p_l, &probs.p_g, &probs.p_d1, &probs.p_d2, &probs.p_d3};
  for (std::size_t k = 0; k < state.dim(); ++k) {
    *slot[static_cast<std::size_t>(partition.classes[k])] += std::norm(state.amps[k]);
  }
  return probs;
}

}  // namespace qkr
