#ifndef CYLWAVE_H
#define CYLWAVE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CwStatus {
  CW_STATUS_OK = 0,
  CW_STATUS_NULL_POINTER = 1,
  CW_STATUS_INVALID_ARGUMENT = 2,
  CW_STATUS_COMPUTATION_FAILED = 3,
  CW_STATUS_BUFFER_TOO_SMALL = 4,
  CW_STATUS_PANIC = 5,
} CwStatus;

/**
 * Opaque perturbative expansion.
 */
typedef struct CwExpansion CwExpansion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Expands to `order` with all free data zero.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum CwStatus cw_expansion_new(uint32_t order, struct CwExpansion **out);

/**
 * Expands to `order` with free data `f_{orders[i]}^(0)(0) = numerators[i] / denominators[i]`.
 *
 * # Safety
 * The three arrays must hold `len` elements each (they may be null when
 * `len` is 0); `out` must be valid for writing a handle.
 */
enum CwStatus cw_expansion_new_with_free_data(uint32_t order,
                                              const uint32_t *orders,
                                              const int64_t *numerators,
                                              const int64_t *denominators,
                                              size_t len,
                                              struct CwExpansion **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` must come from `cw_expansion_new*` and not be used afterwards.
 */
void cw_expansion_free(struct CwExpansion *h);

/**
 * # Safety
 * `h` must be a live handle and `out` valid for writing.
 */
enum CwStatus cw_expansion_max_order(const struct CwExpansion *h, uint32_t *out);

/**
 * Writes `theta_index` as an exact fraction such as `"3/4"`.
 *
 * # Safety
 * `h` must be a live handle; `buf` valid for `buf_len` bytes; `required` may be null.
 */
enum CwStatus cw_expansion_theta(const struct CwExpansion *h,
                                 uint32_t index,
                                 char *buf,
                                 size_t buf_len,
                                 size_t *required);

/**
 * Writes `f_order^(mode)` in the canonical text form.
 *
 * # Safety
 * As for `cw_expansion_theta`.
 */
enum CwStatus cw_expansion_poly(const struct CwExpansion *h,
                                uint32_t order,
                                uint32_t mode,
                                char *buf,
                                size_t buf_len,
                                size_t *required);

/**
 * Sets `*is_zero` to whether the exact residual of `(order, mode)` vanishes.
 *
 * # Safety
 * `h` must be a live handle and `is_zero` valid for writing.
 */
enum CwStatus cw_expansion_residual_is_zero(const struct CwExpansion *h,
                                            uint32_t order,
                                            uint32_t mode,
                                            bool *is_zero);

/**
 * `Omega(epsilon)` from the stored shifts.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writing.
 */
enum CwStatus cw_expansion_frequency(const struct CwExpansion *h, double epsilon, double *out);

/**
 * Truncated series `f(t, psi)` at amplitude `epsilon`.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writing.
 */
enum CwStatus cw_expansion_evaluate(const struct CwExpansion *h,
                                    double epsilon,
                                    double t,
                                    double psi,
                                    double *out);

/**
 * Relative return defect of the PDE flow started from the order-`order` data.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writing.
 */
enum CwStatus cw_pde_periodicity_error(const struct CwExpansion *h,
                                       double epsilon,
                                       uint32_t order,
                                       uint32_t n_modes,
                                       double dt,
                                       double *out);

/**
 * `C_ijk^(m)`.
 */
uint64_t cw_interaction_coeff(uint32_t i, uint32_t j, uint32_t k, uint32_t m);

/**
 * Duffing period through `(x0, 0)` by quadrature.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum CwStatus cw_duffing_period(double x0, uint32_t quad_points, double *out);

/**
 * First-return time and closure gap of the Duffing orbit through `(x0, 0)`.
 *
 * # Safety
 * Both output pointers must be valid for writing.
 */
enum CwStatus cw_duffing_orbit_closure(double x0, double tol, double *return_time, double *gap);

/**
 * Copies the calling thread's last error message.
 *
 * # Safety
 * As for `cw_expansion_theta`.
 */
enum CwStatus cw_last_error_message(char *buf, size_t buf_len, size_t *required);

/**
 * Library version, static storage.
 */
const char *cw_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYLWAVE_H */
