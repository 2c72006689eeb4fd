// Command-line front end for the qkolkata engine. Talks to the shared
// library exclusively through the C interface in qkolkata.h; data goes to
// stdout, diagnostics to stderr. Exit codes: 0 success, 1 input error,
// 2 runtime failure.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkolkata.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRuntime = 2;

int exit_code_for(qk_status status) {
  switch (status) {
    case QK_OK:
      return kExitOk;
    case QK_ERR_INVALID_ARG:
    case QK_ERR_UNSUPPORTED:
    case QK_ERR_PARSE:
      return kExitInput;
    default:
      return kExitRuntime;
  }
}

int fail(qk_status status, const std::string& context) {
  std::cerr << "qkolkata: " << context << ": " << qk_status_name(status);
  const char* detail = qk_last_error();
  if (detail != nullptr && detail[0] != '\0') {
    std::cerr << ": " << detail;
  }
  std::cerr << '\n';
  return exit_code_for(status);
}

// RAII around the C handles so error paths cannot leak.
template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { Free(ptr_); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using StateHandle = Handle<qk_state, qk_state_free>;
using UnitaryHandle = Handle<qk_unitary, qk_unitary_free>;
using PartitionHandle = Handle<qk_partition, qk_partition_free>;
using ResultHandle = Handle<qk_opt_result, qk_result_free>;
using SweepHandle = Handle<qk_sweep, qk_sweep_free>;

class OwnedString {
 public:
  OwnedString() = default;
  ~OwnedString() { qk_string_free(ptr_); }
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  char** out() { return &ptr_; }
  const char* c_str() const { return ptr_ == nullptr ? "" : ptr_; }

 private:
  char* ptr_ = nullptr;
};

bool read_file(const std::string& path, std::string& text, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = path + ": " + std::strerror(errno);
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    error = path + ": read failed";
    return false;
  }
  text = buffer.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text, std::string& error) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    error = path + ": " + std::strerror(errno);
    return false;
  }
  out << text;
  out.flush();
  if (!out) {
    error = path + ": write failed";
    return false;
  }
  return true;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

struct OptimizeArgs {
  double theta = 0.0;
  double phi = 0.0;
  int restarts = 0;
  unsigned long long seed = 0;
};

int run_optimize(const OptimizeArgs& args) {
  qk_opt_config config;
  qk_opt_config_init(&config);
  if (args.restarts > 0) {
    config.restarts = args.restarts;
  }
  config.seed = args.seed;

  StateHandle state;
  if (qk_status s = qk_state_ghz_family(args.theta, args.phi, state.out())) {
    return fail(s, "building initial state");
  }
  PartitionHandle partition;
  if (qk_status s = qk_partition_create(3, 3, partition.out())) {
    return fail(s, "building outcome partition");
  }
  ResultHandle result;
  if (qk_status s = qk_optimize_symmetric(state.get(), partition.get(), &config, result.out())) {
    return fail(s, "optimizing");
  }
  OwnedString json;
  if (qk_status s = qk_result_to_json(result.get(), json.out())) {
    return fail(s, "serializing result");
  }
  std::cout << json.c_str() << '\n';
  return kExitOk;
}

struct SweepArgs {
  int m_max = 20;
  int n_max = 20;
  unsigned long long seed = 0;
  std::string out_format = "csv";
  std::string heatmap_path;
  bool with_nash_gap = false;
};

int run_sweep_cmd(const SweepArgs& args) {
  qk_opt_config config;
  qk_opt_config_init(&config);
  config.seed = args.seed;

  SweepHandle sweep;
  if (qk_status s = qk_sweep_run(args.m_max, args.n_max, &config, args.with_nash_gap ? 1 : 0, 0,
                                 sweep.out())) {
    return fail(s, "running sweep");
  }

  OwnedString table;
  if (args.out_format == "json") {
    if (qk_status s = qk_sweep_to_json(sweep.get(), table.out())) {
      return fail(s, "exporting sweep table");
    }
  } else {
    if (qk_status s = qk_sweep_to_csv(sweep.get(), table.out())) {
      return fail(s, "exporting sweep table");
    }
  }
  std::cout << table.c_str();

  if (!args.heatmap_path.empty()) {
    OwnedString svg;
    if (qk_status s = qk_sweep_to_svg(sweep.get(), svg.out())) {
      return fail(s, "rendering heatmap");
    }
    std::string error;
    if (!write_file(args.heatmap_path, svg.c_str(), error)) {
      std::cerr << "qkolkata: writing heatmap: " << error << '\n';
      return kExitRuntime;
    }
  }
  return kExitOk;
}

struct NashArgs {
  double theta = 0.0;
  double phi = 0.0;
  unsigned long long seed = 0;
};

int run_nash_check(const NashArgs& args) {
  qk_opt_config config;
  qk_opt_config_init(&config);
  config.seed = args.seed;

  StateHandle state;
  if (qk_status s = qk_state_ghz_family(args.theta, args.phi, state.out())) {
    return fail(s, "building initial state");
  }
  PartitionHandle partition;
  if (qk_status s = qk_partition_create(3, 3, partition.out())) {
    return fail(s, "building outcome partition");
  }
  ResultHandle result;
  if (qk_status s = qk_optimize_symmetric(state.get(), partition.get(), &config, result.out())) {
    return fail(s, "optimizing symmetric strategy");
  }
  UnitaryHandle best;
  if (qk_status s = qk_result_unitary(result.get(), best.out())) {
    return fail(s, "extracting strategy");
  }
  double payoff = 0.0;
  qk_result_payoff(result.get(), &payoff);
  double gap = 0.0;
  if (qk_status s = qk_nash_gap(state.get(), best.get(), partition.get(), &config, &gap)) {
    return fail(s, "searching best response");
  }
  std::cout << "{\"theta\": " << format_double(args.theta) << ", \"phi\": " << format_double(args.phi)
            << ", \"payoff\": " << format_double(payoff) << ", \"nash_gap\": " << format_double(gap)
            << "}\n";
  return kExitOk;
}

struct PayoffArgs {
  std::string state_path;
  std::string unitary_path;
};

int run_payoff(const PayoffArgs& args) {
  std::string state_text;
  std::string error;
  if (!read_file(args.state_path, state_text, error)) {
    std::cerr << "qkolkata: reading state: " << error << '\n';
    return kExitInput;
  }
  std::string unitary_text;
  if (!read_file(args.unitary_path, unitary_text, error)) {
    std::cerr << "qkolkata: reading unitary: " << error << '\n';
    return kExitInput;
  }

  StateHandle state;
  if (qk_status s = qk_state_from_json(state_text.c_str(), state.out())) {
    return fail(s, "parsing state " + args.state_path);
  }
  UnitaryHandle unitary;
  if (qk_status s = qk_unitary_from_json(unitary_text.c_str(), unitary.out())) {
    return fail(s, "parsing unitary " + args.unitary_path);
  }
  int n = 0;
  int m = 0;
  qk_state_shape(state.get(), &n, &m);
  PartitionHandle partition;
  if (qk_status s = qk_partition_create(n, m, partition.out())) {
    return fail(s, "building outcome partition");
  }
  StateHandle final_state;
  if (qk_status s = qk_apply_symmetric(state.get(), unitary.get(), final_state.out())) {
    return fail(s, "applying strategy");
  }
  std::cout << "{\"payoffs\": [";
  for (int player = 1; player <= n; ++player) {
    double payoff = 0.0;
    if (qk_status s = qk_expected_payoff(final_state.get(), partition.get(), player, &payoff)) {
      return fail(s, "evaluating payoff");
    }
    std::cout << (player > 1 ? ", " : "") << format_double(payoff);
  }
  std::cout << "]}\n";
  return kExitOk;
}

int run_classical(int n, int m) {
  OwnedString json;
  if (qk_status s = qk_classical_report_json(n, m, 60, json.out())) {
    return fail(s, "computing classical report");
  }
  std::cout << json.c_str() << '\n';
  return kExitOk;
}

int run_partition(int n, int m) {
  PartitionHandle partition;
  if (qk_status s = qk_partition_create(n, m, partition.out())) {
    return fail(s, "building outcome partition");
  }
  OwnedString json;
  if (qk_status s = qk_partition_to_json(partition.get(), json.out())) {
    return fail(s, "serializing partition");
  }
  std::cout << json.c_str() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and optimizer for the quantum Kolkata restaurant game"};
  app.require_subcommand(1);

  qk_opt_config defaults;
  qk_opt_config_init(&defaults);

  OptimizeArgs optimize_args;
  optimize_args.seed = defaults.seed;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Maximize the shared-strategy payoff for a GHZ-family state");
  optimize->add_option("--theta", optimize_args.theta, "Family angle theta (radians)")->required();
  optimize->add_option("--phi", optimize_args.phi, "Family angle phi (radians)")->required();
  optimize->add_option("--restarts", optimize_args.restarts, "Multi-start restarts");
  optimize->add_option("--seed", optimize_args.seed, "Optimizer seed");

  SweepArgs sweep_args;
  sweep_args.seed = defaults.seed;
  CLI::App* sweep = app.add_subcommand("sweep", "Optimize every cell of the GHZ-family grid");
  sweep->add_option("--mmax", sweep_args.m_max, "Grid cells along phi")->check(CLI::PositiveNumber);
  sweep->add_option("--nmax", sweep_args.n_max, "Grid cells along theta")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.seed, "Base seed; cell seeds derive from it");
  sweep->add_option("--out", sweep_args.out_format, "Table format on stdout")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--heatmap", sweep_args.heatmap_path, "Write an SVG heatmap to this path");
  sweep->add_flag("--nash-gap", sweep_args.with_nash_gap,
                  "Also run a best-response search per cell (triples cost)");

  NashArgs nash_args;
  nash_args.seed = defaults.seed;
  CLI::App* nash = app.add_subcommand(
      "nash-check", "Optimize a GHZ-family cell and measure the best unilateral deviation");
  nash->add_option("--theta", nash_args.theta, "Family angle theta (radians)")->required();
  nash->add_option("--phi", nash_args.phi, "Family angle phi (radians)")->required();
  nash->add_option("--seed", nash_args.seed, "Optimizer seed");

  PayoffArgs payoff_args;
  CLI::App* payoff = app.add_subcommand(
      "payoff", "Apply a unitary symmetrically to a state file and print per-player payoffs");
  payoff->add_option("--state", payoff_args.state_path, "State JSON file")->required();
  payoff->add_option("--unitary", payoff_args.unitary_path, "Unitary JSON file")->required();

  int classical_n = 3;
  int classical_m = 3;
  CLI::App* classical = app.add_subcommand("classical", "Classical mixed-strategy baseline");
  classical->add_option("--n", classical_n, "Player count");
  classical->add_option("--m", classical_m, "Choice count");

  int partition_n = 3;
  int partition_m = 3;
  CLI::App* partition = app.add_subcommand("partition", "Dump the outcome classification");
  partition->add_option("--n", partition_n, "Player count");
  partition->add_option("--m", partition_m, "Choice count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (app.got_subcommand(optimize)) {
    return run_optimize(optimize_args);
  }
  if (app.got_subcommand(sweep)) {
    return run_sweep_cmd(sweep_args);
  }
  if (app.got_subcommand(nash)) {
    return run_nash_check(nash_args);
  }
  if (app.got_subcommand(payoff)) {
    return run_payoff(payoff_args);
  }
  if (app.got_subcommand(classical)) {
    return run_classical(classical_n, classical_m);
  }
  if (app.got_subcommand(partition)) {
    return run_partition(partition_n, partition_m);
  }
  std::cerr << "qkolkata: no subcommand selected\n";
  return kExitInput;
}
