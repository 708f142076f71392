#ifndef PARAQ_H
#define PARAQ_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum ParaqStatus {
  /**
   * Success.
   */
  PARAQ_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  PARAQ_NULL_ARGUMENT = 1,
  /**
   * An argument failed to parse or was out of range.
   */
  PARAQ_INVALID_ARGUMENT = 2,
} ParaqStatus;

/**
 * Opaque verification report handle.
 */
typedef struct ParaqReport ParaqReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *paraq_version(void);

/**
 * Runs the defining-relation and Hopf-axiom suites for one grid point.
 * `spin` is a half-integer string like "1/2"; `delta` a rational "p/q".
 *
 * # Safety
 * `spin` and `delta` must be NULL or valid NUL-terminated strings; `out`
 * must be a valid pointer to a report pointer.
 */
enum ParaqStatus paraq_verify(const char *spin,
                              int32_t order,
                              const char *delta,
                              struct ParaqReport **out);

/**
 * R-matrix factorization, intertwiner, and Yang-Baxter checks on (j, j).
 *
 * # Safety
 * As for [`paraq_verify`].
 */
enum ParaqStatus paraq_rmatrix(const char *spin, const char *delta, struct ParaqReport **out);

/**
 * Exponential-identity check for the two-variable composition.
 *
 * # Safety
 * As for [`paraq_verify`].
 */
enum ParaqStatus paraq_cbh(int32_t order1,
                           int32_t order2,
                           const char *delta1,
                           const char *delta2,
                           struct ParaqReport **out);

/**
 * Two-parameter Hopf-axiom battery.
 *
 * # Safety
 * As for [`paraq_verify`].
 */
enum ParaqStatus paraq_two_param_hopf(const char *spin,
                                      int32_t order1,
                                      int32_t order2,
                                      const char *delta1,
                                      const char *delta2,
                                      struct ParaqReport **out);

/**
 * Unit-circle and nonlinear-limit checks at one truncation order.
 *
 * # Safety
 * `out` must be a valid pointer to a report pointer.
 */
enum ParaqStatus paraq_limits(int32_t order, struct ParaqReport **out);

/**
 * 1 if every check in the report passed, 0 if any failed, -1 on NULL.
 *
 * # Safety
 * `report` must be NULL or a pointer obtained from this library.
 */
int32_t paraq_report_passed(const struct ParaqReport *report);

/**
 * Number of checks in the report, -1 on NULL.
 *
 * # Safety
 * As for [`paraq_report_passed`].
 */
int64_t paraq_report_check_count(const struct ParaqReport *report);

/**
 * Serializes the report document as JSON. Returns NULL on NULL input.
 * Free the result with [`paraq_string_free`].
 *
 * # Safety
 * As for [`paraq_report_passed`].
 */
char *paraq_report_json(const struct ParaqReport *report);

/**
 * ψ_0 … ψ_kmax as a JSON array of polynomial strings. Free with
 * [`paraq_string_free`].
 */
char *paraq_psi_json(int32_t kmax);

/**
 * Releases a report handle. NULL is a no-op.
 *
 * # Safety
 * `report` must be NULL or a pointer obtained from this library, not yet
 * freed.
 */
void paraq_report_free(struct ParaqReport *report);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string obtained from this library, not yet freed.
 */
void paraq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARAQ_H */
