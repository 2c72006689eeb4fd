/* qkolkata — quantum Kolkata restaurant game engine, C interface.
 *
 * Every function returns QK_OK on success or a qk_status error code; output
 * values travel through out-parameters. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Strings
 * returned through char** are heap-allocated; release them with
 * qk_string_free. qk_last_error() returns a thread-local description of the
 * most recent failure on the calling thread.
 *
 * Players are numbered 1..n. Basis outcomes are flat indices with player 1
 * as the most significant base-m digit.
 */
#ifndef QKOLKATA_H
#define QKOLKATA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qk_status {
  QK_OK = 0,
  QK_ERR_INVALID_ARG = 1, /* bad value, dimension mismatch, null pointer */
  QK_ERR_UNSUPPORTED = 2, /* operation undefined for this game shape */
  QK_ERR_PARSE = 3,       /* malformed JSON document */
  QK_ERR_IO = 4,          /* file system failure */
  QK_ERR_RUNTIME = 5      /* anything else */
} qk_status;

const char* qk_version(void);
const char* qk_status_name(qk_status status);
const char* qk_last_error(void);
void qk_string_free(char* text);

/* ------------------------------------------------------------------ */
/* States                                                              */

typedef struct qk_state qk_state;

/* alpha|000> + beta|111> + gamma|222> with alpha = sin(theta)cos(phi),
 * beta = sin(theta)sin(phi), gamma = cos(theta). */
qk_status qk_state_ghz_family(double theta, double phi, qk_state** out);
qk_status qk_state_basis(int n, int m, const int* choices, qk_state** out);
qk_status qk_state_from_json(const char* json, qk_state** out);
qk_status qk_state_to_json(const qk_state* state, char** json_out);
qk_status qk_state_shape(const qk_state* state, int* n_out, int* m_out);
qk_status qk_state_probability(const qk_state* state, long index, double* out);
void qk_state_free(qk_state* state);

/* ------------------------------------------------------------------ */
/* Strategy unitaries                                                  */

typedef struct qk_unitary qk_unitary;

qk_status qk_unitary_identity(int m, qk_unitary** out);
qk_status qk_unitary_fourier(int m, qk_unitary** out);
/* coeffs: m*m-1 generator coefficients. */
qk_status qk_unitary_from_params(int m, const double* coeffs, int count, qk_unitary** out);
qk_status qk_unitary_from_json(const char* json, qk_unitary** out);
qk_status qk_unitary_to_json(const qk_unitary* u, char** json_out);
void qk_unitary_free(qk_unitary* u);

/* ------------------------------------------------------------------ */
/* Game rule and payoffs                                               */

typedef struct qk_partition qk_partition;

qk_status qk_partition_create(int n, int m, qk_partition** out);
qk_status qk_partition_to_json(const qk_partition* partition, char** json_out);
void qk_partition_free(qk_partition* partition);

/* Applies the same unitary to every player's subsystem. */
qk_status qk_apply_symmetric(const qk_state* state, const qk_unitary* u, qk_state** out);
qk_status qk_expected_payoff(const qk_state* state, const qk_partition* partition, int player,
                             double* out);
/* probs_out receives P_L, P_G, P_D1, P_D2, P_D3 (n = m = 3 only). */
qk_status qk_class_probabilities(const qk_state* state, const qk_partition* partition,
                                 double probs_out[5]);
qk_status qk_symmetric_payoff(const qk_unitary* u, const qk_state* state,
                              const qk_partition* partition, double* out);

/* ------------------------------------------------------------------ */
/* Optimization                                                        */

typedef struct qk_opt_config {
  int restarts;
  int max_iters;
  double step_tolerance;
  double value_tolerance;
  unsigned long long seed;
  double fd_step;
} qk_opt_config;

void qk_opt_config_init(qk_opt_config* config); /* fills in the defaults */

typedef struct qk_opt_result qk_opt_result;

qk_status qk_optimize_symmetric(const qk_state* state, const qk_partition* partition,
                                const qk_opt_config* config, qk_opt_result** out);
qk_status qk_best_response(const qk_state* state, const qk_unitary* fixed, int player,
                           const qk_partition* partition, const qk_opt_config* config,
                           qk_opt_result** out);
qk_status qk_nash_gap(const qk_state* state, const qk_unitary* u, const qk_partition* partition,
                      const qk_opt_config* config, double* gap_out);

qk_status qk_result_payoff(const qk_opt_result* result, double* out);
qk_status qk_result_converged(const qk_opt_result* result, int* out);
qk_status qk_result_unitary(const qk_opt_result* result, qk_unitary** out);
qk_status qk_result_to_json(const qk_opt_result* result, char** json_out);
void qk_result_free(qk_opt_result* result);

/* ------------------------------------------------------------------ */
/* Classical baseline                                                  */

qk_status qk_classical_baseline(int n, int m, double* out);
qk_status qk_classical_report_json(int n, int m, int grid_resolution, char** json_out);

/* ------------------------------------------------------------------ */
/* Grid sweep                                                          */

typedef struct qk_sweep qk_sweep;

/* One optimization per (M,N) cell, M = 1..m_max, N = 1..n_max. threads = 0
 * picks one worker per core; QKOLKATA_THREADS bounds the count. */
qk_status qk_sweep_run(int m_max, int n_max, const qk_opt_config* config, int with_nash_gap,
                       unsigned threads, qk_sweep** out);
qk_status qk_sweep_row_count(const qk_sweep* sweep, long* out);
qk_status qk_sweep_to_csv(const qk_sweep* sweep, char** text_out);
qk_status qk_sweep_to_json(const qk_sweep* sweep, char** text_out);
qk_status qk_sweep_to_svg(const qk_sweep* sweep, char** text_out);
void qk_sweep_free(qk_sweep* sweep);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QKOLKATA_H */
