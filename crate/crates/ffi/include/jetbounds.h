#ifndef JETBOUNDS_H
#define JETBOUNDS_H

/* Generated by cbindgen from jetbounds-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; the first four mirror the CLI exit codes.
 */
typedef enum jb_status {
  /**
   * Operation succeeded and every check passed.
   */
  JB_STATUS_OK = 0,
  /**
   * A witness was absent or some check failed.
   */
  JB_STATUS_FAIL = 1,
  /**
   * Invalid arguments.
   */
  JB_STATUS_USAGE = 2,
  /**
   * Input exceeds the exact desk-scale guards.
   */
  JB_STATUS_SCALE_GUARD = 3,
  /**
   * A required pointer argument was null.
   */
  JB_STATUS_NULL_ARGUMENT = 4,
  /**
   * Unexpected internal fault.
   */
  JB_STATUS_INTERNAL = 5,
} jb_status;

/**
 * Opaque run report; inspect through `jb_report_pass` / `jb_report_json`.
 */
typedef struct jb_report jb_report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; never freed.
 */
const char *jb_version(void);

/**
 * Frees a string returned through a `char**` out-parameter.
 *
 * # Safety
 * `s` must be a pointer previously returned by this library and not yet
 * freed; passing anything else is undefined behavior. Null is ignored.
 */
void jb_string_free(char *s);

/**
 * Writes the hypersurface degree bound for dimension `n` as a decimal
 * string.
 *
 * # Safety
 * `out` must be a valid pointer to writable `char*` storage.
 */
enum jb_status jb_kobayashi_bound(uint32_t n, char **out);

/**
 * Writes the complete-intersection degree bound for projective `N`-space
 * as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer to writable `char*` storage.
 */
enum jb_status jb_debarre_bound(uint32_t big_n, char **out);

/**
 * Searches a witness decomposition `d = n(n+1)(r+n) + ε`; `d_decimal` is a
 * decimal integer string. Returns `Ok` when a witness exists, `Fail` when
 * absent; the report is produced either way.
 *
 * # Safety
 * `d_decimal` must be a NUL-terminated string and `out` a valid pointer to
 * writable report-handle storage.
 */
enum jb_status jb_witness_kobayashi(uint32_t n, const char *d_decimal, struct jb_report **out);

/**
 * Searches a witness decomposition `d_p = δ_p(r+1) + ε_p` for `c` factors;
 * `d_csv` lists decimal degrees separated by commas (one value is
 * replicated to all factors).
 *
 * # Safety
 * `d_csv` must be a NUL-terminated string and `out` a valid pointer to
 * writable report-handle storage.
 */
enum jb_status jb_witness_debarre(uint32_t big_n,
                                  uint32_t c,
                                  const char *d_csv,
                                  bool search_delta,
                                  struct jb_report **out);

/**
 * Runs the Wronskian identity suites with the given seed.
 *
 * # Safety
 * `out` must be a valid pointer to writable report-handle storage.
 */
enum jb_status jb_verify_wronskian(uint32_t n,
                                   uint32_t k,
                                   uint64_t trials,
                                   uint64_t seed,
                                   struct jb_report **out);

/**
 * Verifies the pencil-curve local multiplicity `δ^(N-1)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable report-handle storage.
 */
enum jb_status jb_verify_lemma31(uint32_t big_n, uint32_t delta, struct jb_report **out);

/**
 * Verifies the product-curve local multiplicities `(∏ δ_j^(k+1))/δ_i` for
 * every pencil factor; `delta_csv` lists `c` positive degrees.
 *
 * # Safety
 * `delta_csv` must be a NUL-terminated string and `out` a valid pointer to
 * writable report-handle storage.
 */
enum jb_status jb_verify_lemma_product(uint32_t c,
                                       uint32_t k,
                                       const char *delta_csv,
                                       struct jb_report **out);

/**
 * Verifies the Plücker coordinates and degree-1 property of the pencil
 * curve.
 *
 * # Safety
 * `out` must be a valid pointer to writable report-handle storage.
 */
enum jb_status jb_verify_pluecker(uint32_t big_n, uint32_t delta, struct jb_report **out);

/**
 * Scans the span zero-locus over integer jets for each degree in
 * `delta_csv`.
 *
 * # Safety
 * `delta_csv` must be a NUL-terminated string and `out` a valid pointer to
 * writable report-handle storage.
 */
enum jb_status jb_verify_stabilization(const char *delta_csv, int64_t grid, struct jb_report **out);

/**
 * 1 when every check in the report passed, 0 otherwise, -1 on null.
 *
 * # Safety
 * `report` must be null or a live handle from this library.
 */
int32_t jb_report_pass(const struct jb_report *report);

/**
 * Borrowed pointer to the report's JSON document; valid until the report
 * is freed.
 *
 * # Safety
 * `report` must be null or a live handle from this library.
 */
const char *jb_report_json(const struct jb_report *report);

/**
 * Frees a report handle. Null is ignored.
 *
 * # Safety
 * `report` must be a handle previously returned by this library and not
 * yet freed.
 */
void jb_report_free(struct jb_report *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JETBOUNDS_H */
