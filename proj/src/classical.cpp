#include "qkr/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qkr/errors.hpp"

namespace qkr {

namespace {

// Visits every outcome (choice vector) of the m^n product space in index
// order, with its probability under the given strategy profile.
void for_each_outcome(std::span<const MixedStrategy> strategies, const GameSpec& spec,
                      const std::function<void(std::span<const int>, double)>& visit) {
  std::vector<int> choices(static_cast<std::size_t>(spec.n), 0);
  while (true) {
    double prob = 1.0;
    for (int i = 0; i < spec.n; ++i) {
      prob *= strategies[static_cast<std::size_t>(i)].probs[static_cast<std::size_t>(choices[static_cast<std::size_t>(i)])];
    }
    visit(choices, prob);
    int pos = spec.n - 1;
    while (pos >= 0) {
      if (++choices[static_cast<std::size_t>(pos)] < spec.m) {
        break;
      }
      choices[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }
}

// Payoff of the common strategy when all n players play it.
double symmetric_value(const std::vector<double>& probs, const GameSpec& spec) {
  std::vector<MixedStrategy> profile(static_cast<std::size_t>(spec.n), MixedStrategy{probs});
  return mixed_payoff(profile, spec)[0];
}

// All compositions of `total` into `parts` nonnegative integers.
void for_each_composition(int total, int parts, std::vector<int>& current,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 1) {
    current.push_back(total);
    visit(current);
    current.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    current.push_back(head);
    for_each_composition(total - head, parts - 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

void validate(const MixedStrategy& strategy, int m) {
  if (static_cast<int>(strategy.probs.size()) != m) {
    throw InputError("mixed strategy must assign a probability to each of the m choices");
  }
  double sum = 0.0;
  for (const double p : strategy.probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InputError("mixed strategy probabilities must be finite and nonnegative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InputError("mixed strategy probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

std::vector<double> mixed_payoff(std::span<const MixedStrategy> strategies, const GameSpec& spec) {
  validate(spec);
  if (static_cast<int>(strategies.size()) != spec.n) {
    throw InputError("need one mixed strategy per player");
  }
  for (const auto& s : strategies) {
    validate(s, spec.m);
  }
  std::vector<double> payoffs(static_cast<std::size_t>(spec.n), 0.0);
  for_each_outcome(strategies, spec, [&](std::span<const int> choices, double prob) {
    if (prob == 0.0) {
      return;
    }
    for (const int player : winners(choices)) {
      payoffs[static_cast<std::size_t>(player - 1)] += prob;
    }
  });
  return payoffs;
}

double uniform_baseline(const GameSpec& spec) {
  validate(spec);
  const MixedStrategy uniform{std::vector<double>(static_cast<std::size_t>(spec.m),
                                                  1.0 / static_cast<double>(spec.m))};
  const std::vector<MixedStrategy> profile(static_cast<std::size_t>(spec.n), uniform);
  return mixed_payoff(profile, spec)[0];
}

SymmetricClassicalResult best_symmetric_classical(const GameSpec& spec, int grid_resolution) {
  validate(spec);
  if (grid_resolution < 10) {
    throw InputError("grid resolution must be at least 10");
  }

  // Coarse pass over the whole simplex.
  std::vector<double> best_probs(static_cast<std::size_t>(spec.m), 0.0);
  double best_value = -1.0;
  std::vector<int> counts;
  for_each_composition(grid_resolution, spec.m, counts, [&](const std::vector<int>& c) {
    std::vector<double> probs(static_cast<std::size_t>(spec.m));
    for (int i = 0; i < spec.m; ++i) {
      probs[static_cast<std::size_t>(i)] =
          static_cast<double>(c[static_cast<std::size_t>(i)]) / grid_resolution;
    }
    const double value = symmetric_value(probs, spec);
    if (value > best_value) {
      best_value = value;
      best_probs = probs;
    }
  });

  // Local polish: coordinate moves of shrinking radius around the incumbent,
  // renormalizing each candidate back onto the simplex.
  double radius = 1.0 / grid_resolution;
  int budget = 20000;
  while (radius > 1e-10 && budget > 0) {
    bool improved = false;
    for (int i = 0; i < spec.m; ++i) {
      for (const double direction : {radius, -radius}) {
        --budget;
        std::vector<double> candidate = best_probs;
        candidate[static_cast<std::size_t>(i)] += direction;
        if (candidate[static_cast<std::size_t>(i)] < 0.0) {
          continue;
        }
        double sum = 0.0;
        for (const double p : candidate) {
          sum += p;
        }
        for (auto& p : candidate) {
          p /= sum;
        }
        const double value = symmetric_value(candidate, spec);
        if (value > best_value) {
          best_value = value;
          best_probs = candidate;
          improved = true;
        }
      }
    }
    if (!improved) {
      radius *= 0.5;
    }
  }

  return SymmetricClassicalResult{MixedStrategy{best_probs}, best_value};
}

}  // namespace qkr
