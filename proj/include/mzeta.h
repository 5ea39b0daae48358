/* C interface to the mzeta library.
 *
 * Every fallible call returns an mzeta_status; on failure mzeta_last_error() holds a
 * message for the calling thread. Strings returned through char** are owned by the
 * caller and released with mzeta_string_free. Handles are released with their _free.
 */
#ifndef MZETA_H
#define MZETA_H

#include <stddef.h>

#if defined(MZETA_BUILDING_LIBRARY)
#define MZETA_API __attribute__((visibility("default")))
#else
#define MZETA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mzeta_status {
    MZETA_OK = 0,
    MZETA_INVALID_ARGUMENT = 1,
    MZETA_POLE = 2,
    MZETA_DOMAIN = 3,
    MZETA_DIVERGENT_REGION = 4,
    MZETA_QUADRATURE_FAILURE = 5,
    MZETA_UNKNOWN_IDENTITY = 6,
    MZETA_IO = 7,
    MZETA_INTERNAL = 8
} mzeta_status;

/* "ok", "invalid-argument", "pole", "domain", ... */
MZETA_API const char* mzeta_status_name(mzeta_status status);
MZETA_API const char* mzeta_last_error(void);
MZETA_API const char* mzeta_version(void);
MZETA_API void mzeta_string_free(char* s);

/* ---- single values ---------------------------------------------------------
 *
 * Targets and their keys (optional keys in brackets):
 *   bernoulli       n
 *   bernoulli-poly  n [x]
 *   norlund         m order [x]
 *   stirling1       n k          (unsigned, first kind)
 *   stirling2       n k
 *   hurwitz         s x [N J]
 *   multizeta       n s x [route: auto|series|reduction]
 *   zhat            m s x
 *   zmulti          ms s x [route: auto|series|reduction|quadrature]
 *   umbral          ms n [x] [form: plain|shifted]
 * s is "a", "a+bi" or "a-bi"; x and rationals accept "p/q" or decimals; ms is "1,2,0".
 * Exact targets give "num/den" (or a JSON coefficient array for polynomials).
 */
typedef struct mzeta_value mzeta_value;

MZETA_API mzeta_status mzeta_compute(const char* target, const char* const* keys, const char* const* values,
                                     size_t count, mzeta_value** out);
MZETA_API const char* mzeta_value_text(const mzeta_value* v);
MZETA_API int mzeta_value_is_exact(const mzeta_value* v);
MZETA_API double mzeta_value_real(const mzeta_value* v);
MZETA_API double mzeta_value_imag(const mzeta_value* v);
/* Absolute error bound of a numeric value, 0 for exact values. */
MZETA_API double mzeta_value_tolerance(const mzeta_value* v);
MZETA_API void mzeta_value_free(mzeta_value* v);

/* ---- identity registry ---------------------------------------------------- */

MZETA_API size_t mzeta_identity_count(void);
/* NULL when index is out of range. */
MZETA_API const char* mzeta_identity_id(size_t index);
MZETA_API const char* mzeta_identity_statement(size_t index);
/* Comma-separated variant names, e.g. "as-printed,corrected". */
MZETA_API const char* mzeta_identity_variants(size_t index);

/* One check at explicit parameters; the report is a one-element JSON array. */
MZETA_API mzeta_status mzeta_run_identity(const char* id, const char* variant, const char* const* keys,
                                          const char* const* values, size_t count, char** report_json);

/* ---- suites ----------------------------------------------------------------- */

typedef struct mzeta_suite mzeta_suite;

MZETA_API mzeta_status mzeta_suite_create(mzeta_suite** out);
MZETA_API void mzeta_suite_free(mzeta_suite* suite);
MZETA_API mzeta_status mzeta_suite_add_identity(mzeta_suite* suite, const char* id);
MZETA_API mzeta_status mzeta_suite_add_all(mzeta_suite* suite);
/* Tolerance for numeric identities; <= 0 restores the defaults. */
MZETA_API mzeta_status mzeta_suite_set_tolerance(mzeta_suite* suite, double tol);
/* enabled = 0 zeroes elapsedMs so reports are byte-identical between runs. */
MZETA_API mzeta_status mzeta_suite_set_timing(mzeta_suite* suite, int enabled);
/* 0 = hardware concurrency. */
MZETA_API mzeta_status mzeta_suite_set_threads(mzeta_suite* suite, unsigned threads);
MZETA_API mzeta_status mzeta_suite_set_s_points(mzeta_suite* suite, const char* const* points, size_t count);
MZETA_API mzeta_status mzeta_suite_set_x_points(mzeta_suite* suite, const char* const* points, size_t count);
/* Inclusive index range override, e.g. ("m", 0, 2). */
MZETA_API mzeta_status mzeta_suite_set_range(mzeta_suite* suite, const char* name, unsigned lo, unsigned hi);
MZETA_API mzeta_status mzeta_suite_run(mzeta_suite* suite);
MZETA_API size_t mzeta_suite_pass_count(const mzeta_suite* suite);
MZETA_API size_t mzeta_suite_fail_count(const mzeta_suite* suite);
MZETA_API size_t mzeta_suite_total(const mzeta_suite* suite);
MZETA_API mzeta_status mzeta_suite_to_json(const mzeta_suite* suite, char** out);
MZETA_API mzeta_status mzeta_suite_to_csv(const mzeta_suite* suite, char** out);
/* "PASS p / FAIL f / TOTAL t" */
MZETA_API mzeta_status mzeta_suite_summary(const mzeta_suite* suite, char** out);
/* Compares the last run with a manifest (NULL: the built-in one). *ok is 1 when every
 * (id, variant) matches; *violations lists mismatches one per line (may be empty). */
MZETA_API mzeta_status mzeta_suite_check_manifest(const mzeta_suite* suite, const char* manifest_json, int* ok,
                                                  char** violations);

/* ---- tables ----------------------------------------------------------------
 * kind: stirling1, stirling2, bernoulli, norlund. CSV with a header row. */
MZETA_API mzeta_status mzeta_table_csv(const char* kind, unsigned max_n, unsigned order, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MZETA_H */
