/* C interface of the matroid-verify library. */

#ifndef MATROID_VERIFY_H
#define MATROID_VERIFY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every API call.
 */
typedef enum MvStatus {
  MV_OK = 0,
  MV_NULL_POINTER = 1,
  MV_INVALID_UTF8 = 2,
  MV_PARSE_ERROR = 3,
  MV_INVALID_ARGUMENT = 4,
  MV_AXIOM_VIOLATION = 5,
  MV_RESOURCE_LIMIT = 6,
  MV_PANIC = 7,
  MV_INTERNAL_ERROR = 8,
} MvStatus;

/**
 * Opaque matroid handle.
 */
typedef struct MvMatroid MvMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *mv_version(void);

/**
 * Description of the most recent error on this thread, or NULL.
 * The caller owns the returned string (release with `mv_string_free`).
 */
char *mv_last_error_message(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by this library and not yet
 * freed; NULL is ignored.
 */
void mv_string_free(char *s);

/**
 * Build a matroid from a JSON spec document (same schema as the CLI).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to receive the handle.
 */
enum MvStatus mv_matroid_from_spec_json(const char *json, struct MvMatroid **out);

/**
 * Build the uniform matroid with rank `r` on `n` elements.
 *
 * # Safety
 * `out` must be a valid pointer to receive the handle.
 */
enum MvStatus mv_matroid_uniform(uint32_t r, uint32_t n, struct MvMatroid **out);

/**
 * Release a matroid handle.
 *
 * # Safety
 * `handle` must come from this library and not be freed twice; NULL is
 * ignored.
 */
void mv_matroid_free(struct MvMatroid *handle);

/**
 * Ground-set size of the matroid.
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
enum MvStatus mv_matroid_ground_size(const struct MvMatroid *handle, uint32_t *out);

/**
 * Human-readable descriptor of the matroid (owned by the caller).
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
enum MvStatus mv_matroid_name(const struct MvMatroid *handle, char **out);

/**
 * Independence oracle: is the bitmask-encoded subset independent?
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
enum MvStatus mv_matroid_is_independent(const struct MvMatroid *handle, uint32_t subset, bool *out);

/**
 * Rank of the bitmask-encoded subset.
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
enum MvStatus mv_matroid_rank(const struct MvMatroid *handle, uint32_t subset, uint32_t *out);

/**
 * Dual matroid as a fresh handle.
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
enum MvStatus mv_matroid_dual(const struct MvMatroid *handle, struct MvMatroid **out);

/**
 * Whether the homogenized generating polynomial of the matroid is
 * Lorentzian (1) or not (0).
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
enum MvStatus mv_matroid_g_is_lorentzian(const struct MvMatroid *handle, bool *out);

/**
 * Run a comma-separated list of checks (e.g. "dowling,zhao,strong") on the
 * matroid and return the JSON report (same format as the CLI).
 *
 * # Safety
 * `handle` and `checks_csv` must be valid; `out_json` receives an owned
 * string.
 */
enum MvStatus mv_run_checks_json(const struct MvMatroid *handle,
                                 const char *checks_csv,
                                 char **out_json);

/**
 * Render a polynomial of the matroid as newline-separated
 * `coeff * monomial` lines. `which` is one of `"g"`, `"collapse"`, or
 * `"fk:<k>"`.
 *
 * # Safety
 * `handle` and `which` must be valid; `out` receives an owned string.
 */
enum MvStatus mv_poly_lines(const struct MvMatroid *handle, const char *which, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATROID_VERIFY_H */
