/*
 * C interface to the twisted C*-dynamical system library.
 *
 * All objects are opaque handles created and destroyed through this API; every
 * function returns a status code and writes results through out-parameters.
 * On failure, tcsd_last_error() describes the problem for the calling thread.
 *
 * Documents are JSON files: systems (algebra blocks, group table, action,
 * cocycle), coefficient maps (one matrix per group element, embedded system)
 * and representations (module tensors, rho, v, optional stored vectors).
 * Complex numbers are [re, im] pairs and matrices are row-major.
 */

#ifndef TCSD_H
#define TCSD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcsd_status {
    TCSD_OK = 0,
    TCSD_ERR_IO = 1,
    TCSD_ERR_PARSE = 2,
    TCSD_ERR_VALIDATION = 3,
    TCSD_ERR_INVALID_ARGUMENT = 4,
    TCSD_ERR_PRECONDITION = 5,
    TCSD_ERR_INTERNAL = 6
} tcsd_status;

typedef struct tcsd_system tcsd_system;
typedef struct tcsd_coeff tcsd_coeff;
typedef struct tcsd_rep tcsd_rep;

const char* tcsd_version(void);
const char* tcsd_status_name(tcsd_status status);
/* Message for the most recent failure on this thread; empty when none. */
const char* tcsd_last_error(void);

/* ----- systems ----------------------------------------------------------- */

tcsd_status tcsd_system_load(const char* path, double tol, tcsd_system** out);
tcsd_status tcsd_system_parse(const char* json_text, double tol, tcsd_system** out);
tcsd_status tcsd_system_builtin(const char* name, tcsd_system** out);
tcsd_status tcsd_system_save(const tcsd_system* system, const char* path);
void tcsd_system_free(tcsd_system* system);

tcsd_status tcsd_system_info(const tcsd_system* system, int* group_order, int* algebra_dim,
                             int* rep_dim);
/* Worst residual of the twisted-action laws and of the derived inverse-law
 * sweep; both vanish on valid systems. */
tcsd_status tcsd_system_verify(const tcsd_system* system, double* worst_cocycle,
                               double* worst_inverse_law);

/* ----- crossed product --------------------------------------------------- */

tcsd_status tcsd_crossed_summary(const tcsd_system* system, double tol, int* dim,
                                 int* center_dim, int* blocks, int blocks_capacity,
                                 int* block_count);
tcsd_status tcsd_crossed_export(const tcsd_system* system, double tol, const char* path);

/* ----- coefficient maps -------------------------------------------------- */

tcsd_status tcsd_coeff_load(const char* path, double tol, tcsd_coeff** out);
tcsd_status tcsd_coeff_save(const tcsd_coeff* coeff, const char* path);
tcsd_status tcsd_coeff_identity(const tcsd_system* system, tcsd_coeff** out);
void tcsd_coeff_free(tcsd_coeff* coeff);

/* Positive-definiteness kernel margin and the Gram-Choi margin of the induced
 * multiplier; the two verdicts agree on every input. */
tcsd_status tcsd_pd_check(const tcsd_coeff* coeff, double tol, double* kernel_margin,
                          double* cp_margin, int* kernel_positive, int* cp_positive);

/* Writes the matrix of the induced multiplier on the crossed-product
 * coordinate space (block diagonal, one block per group element). */
tcsd_status tcsd_coeff_export_multiplier(const tcsd_coeff* coeff, const char* path);

/* ----- representations --------------------------------------------------- */

/* Reconstruction of a positive-definite map as a diagonal coefficient of an
 * equivariant pair with a cyclic vector (stored as vector 0). */
tcsd_status tcsd_gr_reconstruct(const tcsd_coeff* coeff, double tol, tcsd_rep** out);
tcsd_status tcsd_rep_load(const char* path, double tol, tcsd_rep** out);
tcsd_status tcsd_rep_save(const tcsd_rep* rep, const char* path);
void tcsd_rep_free(tcsd_rep* rep);

tcsd_status tcsd_rep_dim(const tcsd_rep* rep, int* dim);
tcsd_status tcsd_rep_vector_count(const tcsd_rep* rep, int* count);
/* Coefficient map of two vectors. Indices address the stored vectors when the
 * representation carries any, carrier basis vectors otherwise. */
tcsd_status tcsd_rep_coefficient(const tcsd_rep* rep, int x_index, int y_index, tcsd_coeff** out);

/* ----- property suite ----------------------------------------------------- */

/* Runs the deterministic property battery over the given system files, or over
 * the built-in corpus when n_paths is 0. Writes the JSON report to report_path
 * (when non-null) and/or returns it in *report_json (caller frees with
 * tcsd_string_free). *failures receives the number of failed items. */
tcsd_status tcsd_suite_run(const char* const* system_paths, int n_paths, uint64_t seed,
                           double tol, const char* report_path, char** report_json,
                           int* failures);
void tcsd_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* TCSD_H */
