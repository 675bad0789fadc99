#ifndef BASKAKOV_H
#define BASKAKOV_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BkFamily {
  BK_FAMILY_THETA = 0,
  BK_FAMILY_ETA = 1,
} BkFamily;

typedef enum BkStatus {
  BK_STATUS_OK = 0,
  BK_STATUS_NULL_POINTER = 1,
  BK_STATUS_INVALID_ARGUMENT = 2,
  BK_STATUS_INSUFFICIENT_SAMPLES = 3,
  BK_STATUS_MALFORMED_SAMPLES = 4,
  BK_STATUS_ORDER_TOO_HIGH = 5,
  BK_STATUS_BUFFER_TOO_SMALL = 6,
  BK_STATUS_PANIC = 7,
} BkStatus;

/**
 * Exact coefficient table `θ_r^(n)` or `η_r^(n)`, `r = 0..=r_max`.
 */
typedef struct BkCoeffTable BkCoeffTable;

/**
 * Quasi-interpolant built from uniform samples.
 */
typedef struct BkQuasiInterpolant BkQuasiInterpolant;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the next
 * failing call on the same thread; do not free.
 */
const char *bk_last_error_message(void);

/**
 * Library version, static storage.
 */
const char *bk_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bk_string_free(char *s);

/**
 * Builds `V_{n,N}^(r)` from `samples[k] = f(k/n)`, `k = 0..len-1`.
 *
 * # Safety
 * `samples` must point to `len` readable doubles; `out` must be writable.
 */
enum BkStatus bk_qi_new(uint32_t n,
                        size_t order,
                        size_t truncation,
                        const double *samples,
                        size_t len,
                        struct BkQuasiInterpolant **out);

/**
 * `V_{n,N}^(r) f(x)`.
 *
 * # Safety
 * `qi` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_qi_eval(const struct BkQuasiInterpolant *qi, double x, double *out);

/**
 * Values of all orders `0..=r` at `x` into `out[0..=r]`; `out_len` must be
 * at least `r + 1`.
 *
 * # Safety
 * `qi` must be a live handle; `out` must hold `out_len` doubles.
 */
enum BkStatus bk_qi_eval_orders(const struct BkQuasiInterpolant *qi,
                                double x,
                                double *out,
                                size_t out_len);

/**
 * # Safety
 * `qi` must come from [`bk_qi_new`] and not have been freed. Null is ignored.
 */
void bk_qi_free(struct BkQuasiInterpolant *qi);

/**
 * Coefficient table by the recurrence.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_coeff_table_new(enum BkFamily family,
                                 uint32_t n,
                                 size_t r_max,
                                 struct BkCoeffTable **out);

/**
 * # Safety
 * `table` must be a live handle.
 */
size_t bk_coeff_table_r_max(const struct BkCoeffTable *table);

/**
 * Polynomial `r` as text, e.g. `-(1/22)x - (1/22)x^2`. Free with
 * [`bk_string_free`].
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_coeff_table_poly_string(const struct BkCoeffTable *table, size_t r, char **out);

/**
 * Polynomial `r` evaluated in double precision.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_coeff_table_eval(const struct BkCoeffTable *table,
                                  size_t r,
                                  double x,
                                  double *out);

/**
 * Whole table as JSON with exact `"p/q"` coefficients. Free with
 * [`bk_string_free`].
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum BkStatus bk_coeff_table_to_json(const struct BkCoeffTable *table, char **out);

/**
 * # Safety
 * `table` must come from [`bk_coeff_table_new`] and not have been freed.
 * Null is ignored.
 */
void bk_coeff_table_free(struct BkCoeffTable *table);

/**
 * `Σ_{j=0}^{N} |v^(r)_{j,n}(x)|`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_lebesgue_function(uint32_t n, size_t r, double x, size_t truncation, double *out);

/**
 * Maximum of the Lebesgue function on `[0, x_max]` and where it occurs.
 *
 * # Safety
 * `value` and `argmax` must be writable.
 */
enum BkStatus bk_norm_estimate(uint32_t n,
                               size_t r,
                               double x_max,
                               double coarse_step,
                               uint32_t refine_levels,
                               double *value,
                               double *argmax);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BASKAKOV_H */
