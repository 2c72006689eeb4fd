#include "qkr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qkr/errors.hpp"
#include "qkr/su_param.hpp"

namespace qkr {

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed color-scale endpoints: the classical floor 4/9 and the entangled
// maximum 2/3, so heatmaps from different runs are comparable.
constexpr double kColorLow = 4.0 / 9.0;
constexpr double kColorHigh = 2.0 / 3.0;

std::string format_g12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string heat_color(double payoff) {
  double t = (payoff - kColorLow) / (kColorHigh - kColorLow);
  t = std::clamp(t, 0.0, 1.0);
  // Linear blend from a cold blue to a hot red.
  const int r = static_cast<int>(std::lround(40.0 + t * (215.0 - 40.0)));
  const int g = static_cast<int>(std::lround(70.0 + t * (45.0 - 70.0)));
  const int b = static_cast<int>(std::lround(190.0 + t * (35.0 - 190.0)));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

GhzFamilyPoint ghz_point(int M, int N) {
  if (M < 1 || N < 1) {
    throw InputError("grid indices M, N start at 1");
  }
  GhzFamilyPoint p;
  p.M = M;
  p.N = N;
  p.phi = kPi * M / 40.0;
  p.theta = kPi * N / 40.0;
  p.alpha = std::sin(p.theta) * std::cos(p.phi);
  p.beta = std::sin(p.theta) * std::sin(p.phi);
  p.gamma = std::cos(p.theta);
  return p;
}

PureState ghz_family(double theta, double phi) {
  const double alpha = std::sin(theta) * std::cos(phi);
  const double beta = std::sin(theta) * std::sin(phi);
  const double gamma = std::cos(theta);
  const WeightedChoice terms[] = {
      {{0, 0, 0}, Complex{alpha, 0.0}},
      {{1, 1, 1}, Complex{beta, 0.0}},
      {{2, 2, 2}, Complex{gamma, 0.0}},
  };
  return superpose(terms, 3);
}

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned count = requested;
  if (count == 0) {
    count = std::thread::hardware_concurrency();
    if (count == 0) {
      count = 1;
    }
  }
  if (const char* env = std::getenv("QKOLKATA_THREADS")) {
    char* end = nullptr;
    const long bound = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bound > 0) {
      count = std::min<unsigned>(count, static_cast<unsigned>(bound));
    }
  }
  if (jobs > 0 && count > jobs) {
    count = static_cast<unsigned>(jobs);
  }
  return std::max(1u, count);
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  if (options.m_max < 1 || options.n_max < 1) {
    throw InputError("sweep grid must have at least one cell per axis");
  }
  validate(options.config);
  const GameSpec spec{3, 3, 1.0, 0.0};
  const OutcomePartition partition = build_partition(spec);

  const std::size_t cells = static_cast<std::size_t>(options.m_max) * options.n_max;
  std::vector<SweepRow> rows(cells);

  const auto run_cell = [&](std::size_t cell) {
    const int m_index = static_cast<int>(cell) / options.n_max + 1;
    const int n_index = static_cast<int>(cell) % options.n_max + 1;
    const auto started = std::chrono::steady_clock::now();

    SweepRow row;
    row.point = ghz_point(m_index, n_index);
    const PureState initial = ghz_family(row.point.theta, row.point.phi);

    OptimizerConfig cell_config = options.config;
    cell_config.seed = mix_seed(mix_seed(options.config.seed, static_cast<std::uint64_t>(m_index)),
                                static_cast<std::uint64_t>(n_index));
    const OptimizationResult best = optimize_symmetric(initial, partition, cell_config);
    row.payoff = best.payoff;
    row.converged = best.converged;

    const std::vector<SquareMatrix> ops(3, best.best_unitary);
    row.class_masses = class_probabilities(apply_local(initial, ops), partition);

    if (options.with_nash_gap) {
      OptimizerConfig gap_config = cell_config;
      gap_config.seed = mix_seed(cell_config.seed, 0x676170ULL);
      row.nash_gap = nash_gap(initial, best.best_unitary, partition, gap_config);
    }

    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    rows[cell] = std::move(row);
  };

  const unsigned workers = resolve_workers(options.threads, cells);
  if (workers <= 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) {
      run_cell(cell);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t cell = next.fetch_add(1);
          if (cell >= cells) {
            return;
          }
          run_cell(cell);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  return rows;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  if (rows.empty()) {
    throw InputError("refusing to export an empty sweep");
  }
  std::string out = "M,N,phi,theta,alpha,beta,gamma,payoff,nash_gap,converged\n";
  for (const auto& row : rows) {
    out += std::to_string(row.point.M);
    out += ',';
    out += std::to_string(row.point.N);
    out += ',';
    out += format_g12(row.point.phi);
    out += ',';
    out += format_g12(row.point.theta);
    out += ',';
    out += format_g12(row.point.alpha);
    out += ',';
    out += format_g12(row.point.beta);
    out += ',';
    out += format_g12(row.point.gamma);
    out += ',';
    out += format_g12(row.payoff);
    out += ',';
    if (row.nash_gap) {
      out += format_g12(*row.nash_gap);
    }
    out += ',';
    out += row.converged ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string sweep_to_json(std::span<const SweepRow> rows) {
  if (rows.empty()) {
    throw InputError("refusing to export an empty sweep");
  }
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json cell{
        {"M", row.point.M},           {"N", row.point.N},
        {"phi", row.point.phi},       {"theta", row.point.theta},
        {"alpha", row.point.alpha},   {"beta", row.point.beta},
        {"gamma", row.point.gamma},   {"payoff", row.payoff},
        {"converged", row.converged},
    };
    if (row.nash_gap) {
      cell["nash_gap"] = *row.nash_gap;
    } else {
      cell["nash_gap"] = nullptr;
    }
    doc.push_back(std::move(cell));
  }
  return doc.dump(2);
}

std::string sweep_to_svg(std::span<const SweepRow> rows, int m_max, int n_max) {
  if (m_max < 1 || n_max < 1) {
    throw InputError("heatmap grid must have at least one cell per axis");
  }
  const std::size_t cells = static_cast<std::size_t>(m_max) * n_max;
  if (rows.size() != cells) {
    throw InputError("heatmap needs the complete grid: expected " + std::to_string(cells) +
                     " rows, got " + std::to_string(rows.size()));
  }
  std::vector<const SweepRow*> grid(cells, nullptr);
  for (const auto& row : rows) {
    if (row.point.M < 1 || row.point.M > m_max || row.point.N < 1 || row.point.N > n_max) {
      throw InputError("sweep row outside the heatmap grid");
    }
    grid[static_cast<std::size_t>(row.point.M - 1) * n_max + (row.point.N - 1)] = &row;
  }
  for (const auto* cell : grid) {
    if (cell == nullptr) {
      throw InputError("heatmap grid has missing cells");
    }
  }

  constexpr int kCell = 24;
  constexpr int kMarginLeft = 64;
  constexpr int kMarginBottom = 56;
  constexpr int kMarginTop = 28;
  constexpr int kLegendWidth = 96;
  const int plot_w = m_max * kCell;
  const int plot_h = n_max * kCell;
  const int width = kMarginLeft + plot_w + kLegendWidth;
  const int height = kMarginTop + plot_h + kMarginBottom;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>Expected payoff over the GHZ family grid</title>\n";

  // Cells: M left to right, N bottom to top.
  for (int mi = 1; mi <= m_max; ++mi) {
    for (int ni = 1; ni <= n_max; ++ni) {
      const SweepRow& row = *grid[static_cast<std::size_t>(mi - 1) * n_max + (ni - 1)];
      const int x = kMarginLeft + (mi - 1) * kCell;
      const int y = kMarginTop + (n_max - ni) * kCell;
      svg << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << heat_color(row.payoff) << "\"><title>M="
          << mi << " N=" << ni << " payoff=" << format_g12(row.payoff) << "</title></rect>\n";
    }
  }

  // Axes.
  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
         "\xCF\x86 = \xCF\x80M/40</text>\n";
  svg << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 16 "
      << kMarginTop + plot_h / 2 << ")\">\xCF\x91 = \xCF\x80N/40</text>\n";
  svg << "<text x=\"" << kMarginLeft << "\" y=\"" << kMarginTop + plot_h + 18
      << "\" font-family=\"sans-serif\" font-size=\"11\">M=1</text>\n";
  svg << "<text x=\"" << kMarginLeft + plot_w << "\" y=\"" << kMarginTop + plot_h + 18
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">M=" << m_max
      << "</text>\n";
  svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + plot_h
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">N=1</text>\n";
  svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + 12
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">N=" << n_max
      << "</text>\n";

  // Legend: vertical gradient from the cold floor to the hot maximum.
  const int legend_x = kMarginLeft + plot_w + 28;
  svg << "<defs><linearGradient id=\"heat\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
      << "<stop offset=\"0\" stop-color=\"" << heat_color(kColorLow) << "\"/>"
      << "<stop offset=\"1\" stop-color=\"" << heat_color(kColorHigh) << "\"/>"
      << "</linearGradient></defs>\n";
  svg << "<rect class=\"legend\" x=\"" << legend_x << "\" y=\"" << kMarginTop << "\" width=\"14\" height=\""
      << plot_h << "\" fill=\"url(#heat)\"/>\n";
  svg << "<text x=\"" << legend_x + 20 << "\" y=\"" << kMarginTop + 10
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_g12(kColorHigh) << "</text>\n";
  svg << "<text x=\"" << legend_x + 20 << "\" y=\"" << kMarginTop + plot_h
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_g12(kColorLow) << "</text>\n";
  svg << "<text x=\"" << legend_x << "\" y=\"" << kMarginTop - 8
      << "\" font-family=\"sans-serif\" font-size=\"11\">E($)</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qkr
