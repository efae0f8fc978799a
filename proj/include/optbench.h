/* optbench — seedable black-box optimization toolkit.
 *
 * C interface to the shared library: opaque handles, integer status codes.
 * Every function that can fail returns an optbench_status; on failure a
 * human-readable message is available from optbench_last_error() until the
 * next failing call on the same thread. Handles are destroyed with their
 * matching *_destroy function; destroy functions accept NULL.
 */

#ifndef OPTBENCH_H
#define OPTBENCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OPTBENCH_BUILD)
#    define OPTBENCH_API __declspec(dllexport)
#  else
#    define OPTBENCH_API __declspec(dllimport)
#  endif
#else
#  define OPTBENCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum optbench_status {
    OPTBENCH_OK = 0,
    OPTBENCH_ERR_INVALID_ARGUMENT = 1, /* bad handle, dimension mismatch, null output */
    OPTBENCH_ERR_UNKNOWN_NAME = 2,     /* algorithm or problem name not registered */
    OPTBENCH_ERR_CONFIG = 3,           /* invalid parameters or unrepresentable budget */
    OPTBENCH_ERR_IO = 4,               /* file could not be read or written */
    OPTBENCH_ERR_INTERNAL = 5
} optbench_status;

OPTBENCH_API const char* optbench_status_string(optbench_status status);
OPTBENCH_API const char* optbench_last_error(void);
OPTBENCH_API const char* optbench_version(void);

/* ---- registries --------------------------------------------------------- */

OPTBENCH_API size_t optbench_problem_count(void);
OPTBENCH_API const char* optbench_problem_name(size_t index); /* NULL past the end */
OPTBENCH_API size_t optbench_algorithm_count(void);
OPTBENCH_API const char* optbench_algorithm_name(size_t index);

/* ---- problems ----------------------------------------------------------- */

typedef struct optbench_problem optbench_problem;

OPTBENCH_API optbench_status optbench_problem_create(const char* name, size_t dim,
                                                     optbench_problem** out);
OPTBENCH_API void optbench_problem_destroy(optbench_problem* problem);
OPTBENCH_API size_t optbench_problem_dim(const optbench_problem* problem);
/* lower/upper are caller arrays of length dim; either may be NULL */
OPTBENCH_API optbench_status optbench_problem_bounds(const optbench_problem* problem,
                                                     double* lower, double* upper);
OPTBENCH_API optbench_status optbench_problem_evaluate(const optbench_problem* problem,
                                                       const double* x, size_t len,
                                                       double* value);
OPTBENCH_API int optbench_problem_has_known_optimum(const optbench_problem* problem);
/* point is a caller array of length dim or NULL; value may be NULL */
OPTBENCH_API optbench_status optbench_problem_known_optimum(const optbench_problem* problem,
                                                            double* point, double* value);

/* ---- single runs -------------------------------------------------------- */

typedef struct optbench_result optbench_result;

typedef struct optbench_param {
    const char* key;
    double value;
} optbench_param;

/* Runs one algorithm under an exact evaluation budget; the budget must map
 * onto the algorithm's own generation accounting or OPTBENCH_ERR_CONFIG is
 * returned. params may be NULL when param_count is 0. */
OPTBENCH_API optbench_status optbench_run(const char* algorithm, const optbench_problem* problem,
                                          const optbench_param* params, size_t param_count,
                                          long long evaluation_budget, uint64_t seed,
                                          optbench_result** out);

OPTBENCH_API void optbench_result_destroy(optbench_result* result);
OPTBENCH_API double optbench_result_best_fitness(const optbench_result* result);
OPTBENCH_API long long optbench_result_evaluations(const optbench_result* result);
OPTBENCH_API size_t optbench_result_dim(const optbench_result* result);
OPTBENCH_API optbench_status optbench_result_best_point(const optbench_result* result,
                                                        double* out, size_t len);
OPTBENCH_API size_t optbench_result_trace_size(const optbench_result* result);
/* has_diversity is 0 for trajectory algorithms; any output may be NULL */
OPTBENCH_API optbench_status optbench_result_trace_entry(const optbench_result* result,
                                                         size_t index, long long* evaluations,
                                                         double* best_fitness, double* diversity,
                                                         int* has_diversity);

/* ---- experiments -------------------------------------------------------- */

typedef struct optbench_experiment optbench_experiment;
typedef struct optbench_records optbench_records;

OPTBENCH_API optbench_status optbench_experiment_create(optbench_experiment** out);
OPTBENCH_API void optbench_experiment_destroy(optbench_experiment* experiment);

OPTBENCH_API optbench_status optbench_experiment_add_algorithm(optbench_experiment* experiment,
                                                               const char* name);
/* applies to a previously added algorithm */
OPTBENCH_API optbench_status optbench_experiment_set_algorithm_param(
    optbench_experiment* experiment, const char* algorithm, const char* key, double value);
OPTBENCH_API optbench_status optbench_experiment_add_problem(optbench_experiment* experiment,
                                                             const char* name, size_t dim);
/* explicit seed list, one entry per run; overrides base seeding when used */
OPTBENCH_API optbench_status optbench_experiment_add_seed(optbench_experiment* experiment,
                                                          uint64_t seed);
OPTBENCH_API optbench_status optbench_experiment_set_seeding(optbench_experiment* experiment,
                                                             uint64_t base_seed, int run_count);
OPTBENCH_API optbench_status optbench_experiment_set_budget(optbench_experiment* experiment,
                                                            long long evaluations);
OPTBENCH_API optbench_status optbench_experiment_set_trace_stride(optbench_experiment* experiment,
                                                                  int stride);
OPTBENCH_API optbench_status optbench_experiment_set_workers(optbench_experiment* experiment,
                                                             int workers);

/* Validates the whole spec, runs every (algorithm, problem, seed) cell, and
 * returns the records sorted by (algorithm, problem, dim, seed). */
OPTBENCH_API optbench_status optbench_experiment_run(const optbench_experiment* experiment,
                                                     optbench_records** out);

OPTBENCH_API void optbench_records_destroy(optbench_records* records);
OPTBENCH_API size_t optbench_records_count(const optbench_records* records);
/* writes records.csv and trace.csv under directory (created if missing) */
OPTBENCH_API optbench_status optbench_records_export_csv(const optbench_records* records,
                                                         const char* directory);
/* writes one JSON document with keys "records" and "summary" */
OPTBENCH_API optbench_status optbench_records_export_json(const optbench_records* records,
                                                          const char* path);

/* ---- summaries ---------------------------------------------------------- */

/* Reads a records.csv and returns a formatted per-cell summary table.
 * Returns NULL on failure (see optbench_last_error()); free the string with
 * optbench_string_free. */
OPTBENCH_API char* optbench_summarize_csv(const char* records_csv_path);
OPTBENCH_API void optbench_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* OPTBENCH_H */
