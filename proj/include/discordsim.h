/* discordsim — flat C API over the two-qubit weak-measurement simulator.
 *
 * All functions return a dsim_status; on any failure the thread-local
 * message from dsim_last_error() describes what went wrong. Handles are
 * opaque; every object obtained from a _default/_load call must be
 * released with the matching _free.
 */
#ifndef DISCORDSIM_H
#define DISCORDSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsim_status {
	DSIM_OK = 0,
	DSIM_ERR_INVALID_ARGUMENT = 1, /* bad value, bad config, bad state */
	DSIM_ERR_RUNTIME = 2,          /* I/O failures, solver failures, ... */
	DSIM_ERR_BAD_HANDLE = 3        /* NULL handle or output pointer */
} dsim_status;

/* Opaque run configuration (model, pulses, grids, seeds, output dir). */
typedef struct dsim_config dsim_config;

/* Last error message for the calling thread ("" when the last call was OK).
 * The pointer stays valid until the next discordsim call on this thread. */
const char* dsim_last_error(void);

const char* dsim_version(void);

/* ---- configuration ---------------------------------------------------- */

dsim_status dsim_config_default(dsim_config** out);
/* Parse a JSON config file; unknown keys are rejected. */
dsim_status dsim_config_load(const char* path, dsim_config** out);
void dsim_config_free(dsim_config* cfg);

dsim_status dsim_config_set_seed(dsim_config* cfg, uint64_t seed);
dsim_status dsim_config_set_output_dir(dsim_config* cfg, const char* dir);
/* workers <= 0 selects the hardware concurrency. */
dsim_status dsim_config_set_workers(dsim_config* cfg, int workers);
/* Restrict stage runs to a comma-separated strength list, e.g. "0.3,1.3".
 * NULL or "" clears the filter. Values must match configured strengths. */
dsim_status dsim_config_set_lambda_filter(dsim_config* cfg, const char* csv);

/* Canonical JSON dump of the configuration (sorted keys, stable floats).
 * The returned string must be released with dsim_string_free. */
dsim_status dsim_config_dump(const dsim_config* cfg, char** out);
void dsim_string_free(char* s);

/* Structural validation. *n_violations receives the violation count; when
 * `report` is non-NULL it receives one "path: message" line per violation
 * (release with dsim_string_free). Returns DSIM_OK even when violations
 * exist — only the introspection itself can fail. */
dsim_status dsim_validate(const dsim_config* cfg, int* n_violations, char** report);

/* ---- pipeline stages ---------------------------------------------------
 * Stages re-derive everything they need from (config, seed), so each can
 * run standalone. Artifacts land under the configured output directory.
 * verbose != 0 logs per-stage timing to stderr. */

dsim_status dsim_run_synth_pulses(const dsim_config* cfg, int verbose);
dsim_status dsim_run_sample(const dsim_config* cfg, int verbose);
dsim_status dsim_run_tomo(const dsim_config* cfg, int verbose);
dsim_status dsim_run_reconstruct(const dsim_config* cfg, int verbose);
dsim_status dsim_run_discord(const dsim_config* cfg, int verbose);
dsim_status dsim_run_all(const dsim_config* cfg, int verbose);

/* ---- direct model evaluation -------------------------------------------
 * Model parameter array layout (10 doubles):
 *   {c_t2_alice, c_t2_bob, c_tomo, eta_a, eta_b,
 *    xi_a_rad, xi_b_rad, q_bar, i_bar, sigma_m}
 * Density matrices are 4x4, row-major, interleaved re/im (32 doubles),
 * basis order (gg, ge, eg, ee). */

/* Fill `out_params` with the default calibration values. */
dsim_status dsim_default_model(double out_params[10]);

/* Closed-form conditional Pauli expectations {XX, YY, XY, YX, ZZ} at
 * outcome (i_m, q_m) and strength lambda. */
dsim_status dsim_closed_form(double lambda, double i_m, double q_m, const double params[10],
                             double out[5]);

/* Full conditional state at outcome (i_m, q_m). */
dsim_status dsim_conditional_state(double lambda, double i_m, double q_m,
                                   const double params[10], double out_rho[32]);

/* Quantum discord in bits; side 0 measures qubit A, side 1 measures B.
 * The input must be a valid density matrix. */
dsim_status dsim_discord(const double rho[32], int side, double* out);

/* Mutual information in bits. */
dsim_status dsim_mutual_information(const double rho[32], double* out);

/* lambda = i_bar^2 / (2 sigma_m^2). */
dsim_status dsim_strength_from_separation(double i_bar, double sigma_m, double* out);

#ifdef __cplusplus
}
#endif

#endif /* DISCORDSIM_H */
