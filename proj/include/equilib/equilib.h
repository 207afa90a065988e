#ifndef EQUILIB_H
#define EQUILIB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EQUILIB_BUILDING)
#    define EQ_API __declspec(dllexport)
#  else
#    define EQ_API __declspec(dllimport)
#  endif
#else
#  define EQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eq_status {
  EQ_OK = 0,
  EQ_INVALID_ARGUMENT = 1,
  EQ_INVALID_RESOLUTION = 2,
  EQ_EMPTY_INPUT = 3,
  EQ_DIMENSION_MISMATCH = 4,
  EQ_SYNTAX_ERROR = 5,
  EQ_UNKNOWN_VARIABLE = 6,
  EQ_DIVISION_BY_ZERO = 7,
  EQ_DOMAIN_ERROR = 8,
  EQ_MISSING_VARIABLE = 9,
  EQ_NO_VIOLATION = 10,
  EQ_EMPTY_CONSTRAINT = 11,
  EQ_PARSE_ERROR = 12,
  EQ_SCHEMA_ERROR = 13,
  EQ_INTERNAL_ERROR = 99
} eq_status;

typedef enum eq_property {
  EQ_MONOTONE = 0,
  EQ_PSEUDO_MONOTONE,
  EQ_QUASI_MONOTONE,
  EQ_CYCLIC_MONOTONE,
  EQ_CYCLIC_QUASI_MONOTONE,
  EQ_PROPERLY_QUASI_MONOTONE,
  EQ_UPPER_SIGN
} eq_property;

typedef enum eq_verdict { EQ_HOLDS = 0, EQ_VIOLATED = 1 } eq_verdict;

typedef struct eq_config eq_config;
typedef struct eq_sample eq_sample;
typedef struct eq_bifunction eq_bifunction;

typedef struct eq_budgets {
  unsigned max_cycle_len;
  unsigned max_subset;
  unsigned simplex_subdivisions;
  unsigned segment_subdivisions;
} eq_budgets;

/* NULL members mean "not given"; resolution 0 and tol < 0 likewise. */
typedef struct eq_run_options {
  const char* kind;
  const char* problem;
  const char* hypothesis;
  double tol;
  unsigned resolution;
} eq_run_options;

EQ_API const char* eq_version(void);
EQ_API const char* eq_status_name(eq_status status);
/* Message of the last failing call on this thread; empty when none. */
EQ_API const char* eq_last_error(void);
/* True for failures raised while evaluating a problem (CLI exit code 2). */
EQ_API int eq_is_evaluation_error(eq_status status);

EQ_API eq_status eq_config_load_file(const char* path, eq_config** out);
EQ_API eq_status eq_config_load_string(const char* text, eq_config** out);
EQ_API void eq_config_free(eq_config* cfg);

/* Runs a CLI command and returns the JSON report; free with eq_string_free. */
EQ_API eq_status eq_run(const eq_config* cfg, const char* command,
                        const eq_run_options* options, char** out_json);
EQ_API void eq_string_free(char* s);

/* Box [lo_i, hi_i] sampled on a lattice with `resolution` steps per axis. */
EQ_API eq_status eq_sample_box(const double* lo, const double* hi, size_t dim,
                               unsigned resolution, eq_sample** out);
/* Row-major array of `count` points of dimension `dim`. */
EQ_API eq_status eq_sample_points(const double* coords, size_t count, size_t dim,
                                  eq_sample** out);
EQ_API size_t eq_sample_size(const eq_sample* s);
EQ_API size_t eq_sample_dim(const eq_sample* s);
EQ_API eq_status eq_sample_point(const eq_sample* s, size_t index, double* coords_out);
EQ_API void eq_sample_free(eq_sample* s);

/* Expression in x1..xn, y1..yn. */
EQ_API eq_status eq_bifunction_parse(const char* text, size_t dim, eq_bifunction** out);
EQ_API eq_status eq_bifunction_eval(const eq_bifunction* f, const double* x,
                                    const double* y, double* out);
EQ_API void eq_bifunction_free(eq_bifunction* f);

EQ_API eq_budgets eq_budgets_default(void);

EQ_API eq_status eq_check_property(const eq_bifunction* f, const eq_sample* s,
                                   eq_property property, const eq_budgets* budgets,
                                   double tol, eq_verdict* verdict);
/* star != 0 selects the convex-hull (grid) witness variant. */
EQ_API eq_status eq_check_fip(const eq_bifunction* f, const eq_sample* s, int star,
                              const eq_budgets* budgets, double tol, eq_verdict* verdict);
/* problem: "ep" or "mep". Writes up to `capacity` sample indices of the
   solutions and the total count. */
EQ_API eq_status eq_solve(const eq_bifunction* f, const eq_sample* s, const char* problem,
                          double tol, size_t* indices, size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif
