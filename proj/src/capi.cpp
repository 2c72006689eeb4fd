#include "qkolkata.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "qkr/classical.hpp"
#include "qkr/errors.hpp"
#include "qkr/game.hpp"
#include "qkr/json_io.hpp"
#include "qkr/optimize.hpp"
#include "qkr/qstate.hpp"
#include "qkr/su_param.hpp"
#include "qkr/sweep.hpp"

struct qk_state {
  qkr::PureState value;
};

struct qk_unitary {
  qkr::SquareMatrix value;
};

struct qk_partition {
  qkr::OutcomePartition value;
};

struct qk_opt_result {
  qkr::OptimizationResult value;
};

struct qk_sweep {
  std::vector<qkr::SweepRow> rows;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs the body, translating C++ exceptions into status codes.
template <typename Fn>
qk_status guarded(Fn&& body) {
  try {
    body();
    g_last_error.clear();
    return QK_OK;
  } catch (const qkr::UnsupportedShapeError& e) {
    set_error(e.what());
    return QK_ERR_UNSUPPORTED;
  } catch (const qkr::InputError& e) {
    set_error(e.what());
    return QK_ERR_INVALID_ARG;
  } catch (const qkr::ParseError& e) {
    set_error(e.what());
    return QK_ERR_PARSE;
  } catch (const qkr::IoError& e) {
    set_error(e.what());
    return QK_ERR_IO;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return QK_ERR_RUNTIME;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QK_ERR_RUNTIME;
  } catch (...) {
    set_error("unknown failure");
    return QK_ERR_RUNTIME;
  }
}

qk_status require(bool condition, const char* message) {
  if (!condition) {
    set_error(message);
    return QK_ERR_INVALID_ARG;
  }
  return QK_OK;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

qkr::OptimizerConfig to_config(const qk_opt_config* config) {
  qkr::OptimizerConfig out;
  if (config != nullptr) {
    out.restarts = config->restarts;
    out.max_iters = config->max_iters;
    out.step_tolerance = config->step_tolerance;
    out.value_tolerance = config->value_tolerance;
    out.seed = config->seed;
    out.fd_step = config->fd_step;
  }
  return out;
}

}  // namespace

extern "C" {

const char* qk_version(void) { return "0.1.0"; }

const char* qk_status_name(qk_status status) {
  switch (status) {
    case QK_OK:
      return "ok";
    case QK_ERR_INVALID_ARG:
      return "invalid argument";
    case QK_ERR_UNSUPPORTED:
      return "unsupported game shape";
    case QK_ERR_PARSE:
      return "parse error";
    case QK_ERR_IO:
      return "io error";
    case QK_ERR_RUNTIME:
      return "runtime error";
  }
  return "unknown status";
}

const char* qk_last_error(void) { return g_last_error.c_str(); }

void qk_string_free(char* text) { delete[] text; }

/* ------------------------------------------------------------------ */

qk_status qk_state_ghz_family(double theta, double phi, qk_state** out) {
  if (qk_status s = require(out != nullptr, "out pointer is null")) return s;
  return guarded([&] { *out = new qk_state{qkr::ghz_family(theta, phi)}; });
}

qk_status qk_state_basis(int n, int m, const int* choices, qk_state** out) {
  if (qk_status s = require(out != nullptr && choices != nullptr && n > 0, "bad arguments")) return s;
  return guarded([&] {
    *out = new qk_state{qkr::basis_state(std::span<const int>(choices, static_cast<std::size_t>(n)), m)};
  });
}

qk_status qk_state_from_json(const char* json, qk_state** out) {
  if (qk_status s = require(out != nullptr && json != nullptr, "bad arguments")) return s;
  return guarded([&] { *out = new qk_state{qkr::state_from_json(json)}; });
}

qk_status qk_state_to_json(const qk_state* state, char** json_out) {
  if (qk_status s = require(state != nullptr && json_out != nullptr, "bad arguments")) return s;
  return guarded([&] { *json_out = copy_string(qkr::state_to_json(state->value)); });
}

qk_status qk_state_shape(const qk_state* state, int* n_out, int* m_out) {
  if (qk_status s = require(state != nullptr && n_out != nullptr && m_out != nullptr, "bad arguments"))
    return s;
  *n_out = state->value.n;
  *m_out = state->value.m;
  return QK_OK;
}

qk_status qk_state_probability(const qk_state* state, long index, double* out) {
  if (qk_status s = require(state != nullptr && out != nullptr && index >= 0, "bad arguments")) return s;
  return guarded([&] { *out = qkr::probability(state->value, static_cast<std::size_t>(index)); });
}

void qk_state_free(qk_state* state) { delete state; }

/* ------------------------------------------------------------------ */

qk_status qk_unitary_identity(int m, qk_unitary** out) {
  if (qk_status s = require(out != nullptr && m >= 2, "bad arguments")) return s;
  return guarded([&] { *out = new qk_unitary{qkr::SquareMatrix::identity(m)}; });
}

qk_status qk_unitary_fourier(int m, qk_unitary** out) {
  if (qk_status s = require(out != nullptr, "out pointer is null")) return s;
  return guarded([&] { *out = new qk_unitary{qkr::fourier_gate(m)}; });
}

qk_status qk_unitary_from_params(int m, const double* coeffs, int count, qk_unitary** out) {
  if (qk_status s = require(out != nullptr && coeffs != nullptr && count > 0, "bad arguments")) return s;
  return guarded([&] {
    qkr::UnitaryParams params{m, std::vector<double>(coeffs, coeffs + count)};
    *out = new qk_unitary{qkr::unitary_from_params(params, qkr::generator_basis(m))};
  });
}

qk_status qk_unitary_from_json(const char* json, qk_unitary** out) {
  if (qk_status s = require(out != nullptr && json != nullptr, "bad arguments")) return s;
  return guarded([&] { *out = new qk_unitary{qkr::unitary_from_json(json)}; });
}

qk_status qk_unitary_to_json(const qk_unitary* u, char** json_out) {
  if (qk_status s = require(u != nullptr && json_out != nullptr, "bad arguments")) return s;
  return guarded([&] { *json_out = copy_string(qkr::unitary_to_json(u->value)); });
}

void qk_unitary_free(qk_unitary* u) { delete u; }

/* ------------------------------------------------------------------ */

qk_status qk_partition_create(int n, int m, qk_partition** out) {
  if (qk_status s = require(out != nullptr, "out pointer is null")) return s;
  return guarded([&] {
    *out = new qk_partition{qkr::build_partition(qkr::GameSpec{n, m, 1.0, 0.0})};
  });
}

qk_status qk_partition_to_json(const qk_partition* partition, char** json_out) {
  if (qk_status s = require(partition != nullptr && json_out != nullptr, "bad arguments")) return s;
  return guarded([&] { *json_out = copy_string(qkr::partition_to_json(partition->value)); });
}

void qk_partition_free(qk_partition* partition) { delete partition; }

qk_status qk_apply_symmetric(const qk_state* state, const qk_unitary* u, qk_state** out) {
  if (qk_status s = require(state != nullptr && u != nullptr && out != nullptr, "bad arguments"))
    return s;
  return guarded([&] {
    const std::vector<qkr::SquareMatrix> ops(static_cast<std::size_t>(state->value.n), u->value);
    *out = new qk_state{qkr::apply_local(state->value, ops)};
  });
}

qk_status qk_expected_payoff(const qk_state* state, const qk_partition* partition, int player,
                             double* out) {
  if (qk_status s = require(state != nullptr && partition != nullptr && out != nullptr, "bad arguments"))
    return s;
  return guarded([&] { *out = qkr::expected_payoff(state->value, player, partition->value); });
}

qk_status qk_class_probabilities(const qk_state* state, const qk_partition* partition,
                                 double probs_out[5]) {
  if (qk_status s = require(state != nullptr && partition != nullptr && probs_out != nullptr,
                            "bad arguments"))
    return s;
  return guarded([&] {
    const qkr::ClassProbabilities probs = qkr::class_probabilities(state->value, partition->value);
    probs_out[0] = probs.p_l;
    probs_out[1] = probs.p_g;
    probs_out[2] = probs.p_d1;
    probs_out[3] = probs.p_d2;
    probs_out[4] = probs.p_d3;
  });
}

qk_status qk_symmetric_payoff(const qk_unitary* u, const qk_state* state,
                              const qk_partition* partition, double* out) {
  if (qk_status s = require(u != nullptr && state != nullptr && partition != nullptr && out != nullptr,
                            "bad arguments"))
    return s;
  return guarded([&] { *out = qkr::symmetric_payoff(u->value, state->value, partition->value); });
}

/* ------------------------------------------------------------------ */

void qk_opt_config_init(qk_opt_config* config) {
  if (config == nullptr) {
    return;
  }
  const qkr::OptimizerConfig defaults;
  config->restarts = defaults.restarts;
  config->max_iters = defaults.max_iters;
  config->step_tolerance = defaults.step_tolerance;
  config->value_tolerance = defaults.value_tolerance;
  config->seed = defaults.seed;
  config->fd_step = defaults.fd_step;
}

qk_status qk_optimize_symmetric(const qk_state* state, const qk_partition* partition,
                                const qk_opt_config* config, qk_opt_result** out) {
  if (qk_status s = require(state != nullptr && partition != nullptr && out != nullptr, "bad arguments"))
    return s;
  return guarded([&] {
    *out = new qk_opt_result{qkr::optimize_symmetric(state->value, partition->value, to_config(config))};
  });
}

qk_status qk_best_response(const qk_state* state, const qk_unitary* fixed, int player,
                           const qk_partition* partition, const qk_opt_config* config,
                           qk_opt_result** out) {
  if (qk_status s = require(state != nullptr && fixed != nullptr && partition != nullptr && out != nullptr,
                            "bad arguments"))
    return s;
  return guarded([&] {
    *out = new qk_opt_result{
        qkr::best_response(state->value, fixed->value, player, partition->value, to_config(config))};
  });
}

qk_status qk_nash_gap(const qk_state* state, const qk_unitary* u, const qk_partition* partition,
                      const qk_opt_config* config, double* gap_out) {
  if (qk_status s = require(state != nullptr && u != nullptr && partition != nullptr && gap_out != nullptr,
                            "bad arguments"))
    return s;
  return guarded([&] {
    *gap_out = qkr::nash_gap(state->value, u->value, partition->value, to_config(config));
  });
}

qk_status qk_result_payoff(const qk_opt_result* result, double* out) {
  if (qk_status s = require(result != nullptr && out != nullptr, "bad arguments")) return s;
  *out = result->value.payoff;
  return QK_OK;
}

qk_status qk_result_converged(const qk_opt_result* result, int* out) {
  if (qk_status s = require(result != nullptr && out != nullptr, "bad arguments")) return s;
  *out = result->value.converged ? 1 : 0;
  return QK_OK;
}

qk_status qk_result_unitary(const qk_opt_result* result, qk_unitary** out) {
  if (qk_status s = require(result != nullptr && out != nullptr, "bad arguments")) return s;
  return guarded([&] { *out = new qk_unitary{result->value.best_unitary}; });
}

qk_status qk_result_to_json(const qk_opt_result* result, char** json_out) {
  if (qk_status s = require(result != nullptr && json_out != nullptr, "bad arguments")) return s;
  return guarded([&] { *json_out = copy_string(qkr::result_to_json(result->value)); });
}

void qk_result_free(qk_opt_result* result) { delete result; }

/* ------------------------------------------------------------------ */

qk_status qk_classical_baseline(int n, int m, double* out) {
  if (qk_status s = require(out != nullptr, "out pointer is null")) return s;
  return guarded([&] { *out = qkr::uniform_baseline(qkr::GameSpec{n, m, 1.0, 0.0}); });
}

qk_status qk_classical_report_json(int n, int m, int grid_resolution, char** json_out) {
  if (qk_status s = require(json_out != nullptr, "out pointer is null")) return s;
  return guarded([&] {
    *json_out = copy_string(qkr::classical_report_json(qkr::GameSpec{n, m, 1.0, 0.0}, grid_resolution));
  });
}

/* ------------------------------------------------------------------ */

qk_status qk_sweep_run(int m_max, int n_max, const qk_opt_config* config, int with_nash_gap,
                       unsigned threads, qk_sweep** out) {
  if (qk_status s = require(out != nullptr, "out pointer is null")) return s;
  return guarded([&] {
    qkr::SweepOptions options;
    options.m_max = m_max;
    options.n_max = n_max;
    options.config = to_config(config);
    options.with_nash_gap = with_nash_gap != 0;
    options.threads = threads;
    *out = new qk_sweep{qkr::run_sweep(options)};
  });
}

qk_status qk_sweep_row_count(const qk_sweep* sweep, long* out) {
  if (qk_status s = require(sweep != nullptr && out != nullptr, "bad arguments")) return s;
  *out = static_cast<long>(sweep->rows.size());
  return QK_OK;
}

qk_status qk_sweep_to_csv(const qk_sweep* sweep, char** text_out) {
  if (qk_status s = require(sweep != nullptr && text_out != nullptr, "bad arguments")) return s;
  return guarded([&] { *text_out = copy_string(qkr::sweep_to_csv(sweep->rows)); });
}

qk_status qk_sweep_to_json(const qk_sweep* sweep, char** text_out) {
  if (qk_status s = require(sweep != nullptr && text_out != nullptr, "bad arguments")) return s;
  return guarded([&] { *text_out = copy_string(qkr::sweep_to_json(sweep->rows)); });
}

qk_status qk_sweep_to_svg(const qk_sweep* sweep, char** text_out) {
  if (qk_status s = require(sweep != nullptr && text_out != nullptr, "bad arguments")) return s;
  return guarded([&] {
    int m_max = 0;
    int n_max = 0;
    for (const auto& row : sweep->rows) {
      m_max = std::max(m_max, row.point.M);
      n_max = std::max(n_max, row.point.N);
    }
    *text_out = copy_string(qkr::sweep_to_svg(sweep->rows, m_max, n_max));
  });
}

void qk_sweep_free(qk_sweep* sweep) { delete sweep; }

} /* extern "C" */
