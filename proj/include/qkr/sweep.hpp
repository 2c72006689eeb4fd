#ifndef QKR_SWEEP_HPP
#define QKR_SWEEP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qkr/game.hpp"
#include "qkr/optimize.hpp"
#include "qkr/qstate.hpp"

namespace qkr {

// One point of the GHZ-family grid: phi = pi*M/40, theta = pi*N/40, weights
// alpha = sin(theta)cos(phi), beta = sin(theta)sin(phi), gamma = cos(theta).
struct GhzFamilyPoint {
  int M = 0;
  int N = 0;
  double phi = 0.0;
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

GhzFamilyPoint ghz_point(int M, int N);

// alpha|000> + beta|111> + gamma|222> for the given angles.
PureState ghz_family(double theta, double phi);

struct SweepRow {
  GhzFamilyPoint point;
  double payoff = 0.0;
  std::optional<double> nash_gap;
  bool converged = false;
  ClassProbabilities class_masses;
  double wall_seconds = 0.0;
};

struct SweepOptions {
  int m_max = 20;
  int n_max = 20;
  OptimizerConfig config{};
  bool with_nash_gap = false;
  // Worker threads; 0 = one per hardware core. QKOLKATA_THREADS, when set
  // to a positive value, bounds the count either way.
  unsigned threads = 0;
};

// One optimization per grid cell, rows ordered by (M, N). Per-cell seeds
// derive from (config.seed, M, N), so results do not depend on scheduling.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

unsigned resolve_workers(unsigned requested, std::size_t jobs);

// CSV with header M,N,phi,theta,alpha,beta,gamma,payoff,nash_gap,converged;
// numbers carry 12 significant digits.
std::string sweep_to_csv(std::span<const SweepRow> rows);

// Array of objects mirroring the CSV columns.
std::string sweep_to_json(std::span<const SweepRow> rows);

// SVG 1.1 heatmap of the complete m_max x n_max grid, colored linearly from
// payoff 4/9 (cold) to 2/3 (hot), with axis labels and a legend.
std::string sweep_to_svg(std::span<const SweepRow> rows, int m_max, int n_max);

}  // namespace qkr

#endif
