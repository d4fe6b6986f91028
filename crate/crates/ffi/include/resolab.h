#ifndef RESOLAB_H
#define RESOLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ResolabStatus {
  RESOLAB_STATUS_OK = 0,
  RESOLAB_STATUS_NULL_POINTER = 1,
  RESOLAB_STATUS_INVALID_ARGUMENT = 2,
  RESOLAB_STATUS_INVALID_CURVE = 3,
  RESOLAB_STATUS_INVALID_CONTOUR = 4,
  RESOLAB_STATUS_CONTOUR_ON_RESONANCE = 5,
  RESOLAB_STATUS_PROBE_TOO_SMALL = 6,
  RESOLAB_STATUS_RANK_WINDING_MISMATCH = 7,
  RESOLAB_STATUS_UNCONVERGED = 8,
  RESOLAB_STATUS_EXCLUDED_ZONE = 9,
  RESOLAB_STATUS_OUT_OF_RANGE = 10,
  RESOLAB_STATUS_IO = 11,
  RESOLAB_STATUS_PANIC = 12,
  RESOLAB_STATUS_OTHER = 13,
} ResolabStatus;

typedef enum ResolabSource {
  RESOLAB_SOURCE_BIE = 0,
  RESOLAB_SOURCE_DISK_ORACLE = 1,
  RESOLAB_SOURCE_SPHERE_ORACLE = 2,
} ResolabSource;

/**
 * Opaque boundary curve.
 */
typedef struct ResolabCurve ResolabCurve;

/**
 * Opaque list of resonance records.
 */
typedef struct ResolabRecordList ResolabRecordList;

/**
 * A point `modulus · e^{i argument}` of the logarithmic cover.
 */
typedef struct ResolabLogPoint {
  double modulus;
  double argument;
} ResolabLogPoint;

typedef struct ResolabComplex {
  double re;
  double im;
} ResolabComplex;

/**
 * Sector `arg_min < arg < arg_max`, `mod_min < |λ| < mod_max`.
 */
typedef struct ResolabRegion {
  double arg_min;
  double arg_max;
  double mod_min;
  double mod_max;
} ResolabRegion;

/**
 * Contour for the Beyn solver. Zero `nodes`, `rank_tol` or `probe_dim`
 * select the library defaults.
 */
typedef struct ResolabContour {
  struct ResolabLogPoint center;
  double radius;
  size_t nodes;
  double rank_tol;
  size_t probe_dim;
} ResolabContour;

typedef struct ResolabRecord {
  struct ResolabLogPoint location;
  uint32_t multiplicity;
  double residual;
  enum ResolabSource source;
} ResolabRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` as a
 * NUL-terminated string, truncating to `len - 1` bytes. Returns the full
 * message length in bytes, not counting the terminator.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t resolab_last_error(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *resolab_version(void);

/**
 * `H¹_ν(z)` for `ν = twice_order / 2` at a cover point.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum ResolabStatus resolab_hankel1(uint32_t twice_order,
                                   struct ResolabLogPoint z,
                                   struct ResolabComplex *out);

/**
 * Free resolvent kernel `R₀(λ, |x - y| = dist)` in dimension 2 or 3.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum ResolabStatus resolab_kernel(uint32_t dim,
                                  struct ResolabLogPoint lambda,
                                  double dist,
                                  struct ResolabComplex *out);

/**
 * Named preset (`"disk"`, `"ellipse"`) discretized with `samples` nodes.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum ResolabStatus resolab_curve_preset(const char *name,
                                        size_t samples,
                                        struct ResolabCurve **out);

/**
 * Ellipse with semi-axes `a`, `b`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ResolabStatus resolab_curve_ellipse(double a,
                                         double b,
                                         size_t samples,
                                         struct ResolabCurve **out);

/**
 * Curve from its JSON description (Fourier coefficients and sample count).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum ResolabStatus resolab_curve_from_json(const char *json, struct ResolabCurve **out);

/**
 * Rotated copy of `curve`.
 *
 * # Safety
 * `curve` must be a live handle; `out` must be valid for writes.
 */
enum ResolabStatus resolab_curve_rotated(const struct ResolabCurve *curve,
                                         double angle,
                                         struct ResolabCurve **out);

/**
 * # Safety
 * `curve` must be null or a handle not yet freed.
 */
void resolab_curve_free(struct ResolabCurve *curve);

/**
 * Smallest singular value of the discretized single-layer operator.
 *
 * # Safety
 * `curve` must be a live handle; `out` must be valid for writes.
 */
enum ResolabStatus resolab_smallest_singular_value(const struct ResolabCurve *curve,
                                                   struct ResolabLogPoint lambda,
                                                   double *out);

/**
 * Zeros of `H¹_m`, `m <= m_max`, in `region`.
 *
 * # Safety
 * `region` must be valid for reads; `out` must be valid for writes.
 */
enum ResolabStatus resolab_disk_resonances(uint32_t m_max,
                                           const struct ResolabRegion *region,
                                           struct ResolabRecordList **out);

/**
 * Zeros of the spherical Hankel functions `h¹_l`, `l <= l_max`, in `region`.
 *
 * # Safety
 * `region` must be valid for reads; `out` must be valid for writes.
 */
enum ResolabStatus resolab_sphere_resonances(uint32_t l_max,
                                             const struct ResolabRegion *region,
                                             struct ResolabRecordList **out);

/**
 * Resonances of `curve` inside `contour`.
 *
 * # Safety
 * `curve` must be a live handle, `contour` valid for reads and `out` valid
 * for writes.
 */
enum ResolabStatus resolab_beyn_solve(const struct ResolabCurve *curve,
                                      const struct ResolabContour *contour,
                                      struct ResolabRecordList **out);

/**
 * Total multiplicity inside `contour`, checked against the winding number.
 *
 * # Safety
 * `curve` must be a live handle, `contour` valid for reads and `out` valid
 * for writes.
 */
enum ResolabStatus resolab_multiplicity_in(const struct ResolabCurve *curve,
                                           const struct ResolabContour *contour,
                                           size_t *out);

/**
 * Number of records; 0 for a null list.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
size_t resolab_records_len(const struct ResolabRecordList *list);

/**
 * Copy record `index` into `out`.
 *
 * # Safety
 * `list` must be a live handle; `out` must be valid for writes.
 */
enum ResolabStatus resolab_records_get(const struct ResolabRecordList *list,
                                       size_t index,
                                       struct ResolabRecord *out);

/**
 * # Safety
 * `list` must be null or a handle not yet freed.
 */
void resolab_records_free(struct ResolabRecordList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RESOLAB_H */
