#ifndef ANTIPODAL_H
#define ANTIPODAL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum ApStatus {
  AP_STATUS_OK = 0,
  AP_STATUS_NULL_POINTER = 1,
  AP_STATUS_INVALID_UTF8 = 2,
  AP_STATUS_INVALID_ARGUMENT = 3,
  AP_STATUS_INVALID_JSON = 4,
  AP_STATUS_UNKNOWN_CHECK = 5,
  AP_STATUS_INFEASIBLE = 6,
  AP_STATUS_BUFFER_TOO_SMALL = 7,
  AP_STATUS_IO = 8,
  AP_STATUS_PANIC = 9,
} ApStatus;

/**
 * A deleted square or its orbit complex.
 */
typedef struct ApComplex ApComplex;

/**
 * A cover of a sphere by open sets.
 */
typedef struct ApCover ApCover;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if there was none.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *ap_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ap_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library and not yet freed.
 */
void ap_string_free(char *s);

/**
 * Minimal multiplicity of an antipodal-free open cover of S^h.
 */
size_t ap_q_of(size_t h);

/**
 * Minimal number of sets in an antipodal-free open cover of S^h of multiplicity `ap_q_of(h)` (h >= 1).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ApStatus ap_min_vertices(size_t h,
                              size_t *out);

/**
 * Builds the deleted square of the k-skeleton of the simplex on `n_vertices` vertices.
 *
 * # Safety
 * `out` must be valid for writes. The handle is released with [`ap_complex_free`].
 */
enum ApStatus ap_deleted_square_new(size_t n_vertices, size_t k, struct ApComplex **out);

/**
 * Builds the orbit complex of the deleted square under the swap involution.
 *
 * # Safety
 * `out` must be valid for writes. The handle is released with [`ap_complex_free`].
 */
enum ApStatus ap_orbit_complex_new(size_t n_vertices, size_t k, struct ApComplex **out);

/**
 * Releases a complex. Null is ignored.
 *
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void ap_complex_free(struct ApComplex *c);

/**
 * Top dimension, or -1 for the empty complex.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_complex_dim(const struct ApComplex *c, ptrdiff_t *out);

/**
 * Number of cells of dimension `d` (0 above the top dimension).
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_complex_cell_count(const struct ApComplex *c, size_t d, size_t *out);

/**
 * Euler characteristic.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_complex_euler(const struct ApComplex *c, int64_t *out);

/**
 * Mod-2 Betti numbers b_0..b_top.
 *
 * `len` is the capacity of `out`. `written` always receives the number of entries needed; when
 * it exceeds `len` nothing is copied and [`ApStatus::BufferTooSmall`] is returned.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for `len` writes (may be null if `len` is 0);
 * `written` must be valid for writes.
 */
enum ApStatus ap_complex_betti(const struct ApComplex *c, size_t *out, size_t len, size_t *written);

/**
 * Whether top-dimensional mod-2 homology is zero (true for the empty complex).
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_complex_top_homology_vanishes(const struct ApComplex *c, bool *out);

/**
 * Cell listing as JSON (cells with labels and boundaries).
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes. Free the string with [`ap_string_free`].
 */
enum ApStatus ap_complex_listing_json(const struct ApComplex *c,
                                      char **out);

/**
 * Cap cover of S^h by h + 2 open caps.
 *
 * # Safety
 * `out` must be valid for writes. The handle is released with [`ap_cover_free`].
 */
enum ApStatus ap_cover_caps(size_t h, struct ApCover **out);

/**
 * Cover of S^h obtained by lifting the circle cover h - 1 times with band parameter `epsilon`.
 *
 * # Safety
 * `out` must be valid for writes. The handle is released with [`ap_cover_free`].
 */
enum ApStatus ap_cover_lifted(size_t h, double epsilon, struct ApCover **out);

/**
 * Lifts `base` from S^h to S^(h+1).
 *
 * # Safety
 * `base` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_cover_lift(const struct ApCover *base, double epsilon, struct ApCover **out);

/**
 * Parses and validates a cover document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum ApStatus ap_cover_from_json(const char *json, struct ApCover **out);

/**
 * Serializes a cover to pretty-printed JSON.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes. Free the string with [`ap_string_free`].
 */
enum ApStatus ap_cover_to_json(const struct ApCover *c,
                               char **out);

/**
 * Dimension h of the covered sphere S^h.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_cover_sphere_dim(const struct ApCover *c, size_t *out);

/**
 * Number of sets in the cover.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum ApStatus ap_cover_set_count(const struct ApCover *c, size_t *out);

/**
 * Samples `samples` antipodal pairs with `seed` and writes the verification report as JSON.
 *
 * `pass` receives whether the samples are covered with no antipodal pair inside one set.
 *
 * # Safety
 * `c` must be a live handle; `report` and `pass` must be valid for writes. `report` may be null
 * to skip the JSON.
 */
enum ApStatus ap_cover_verify(const struct ApCover *c,
                              size_t samples,
                              uint64_t seed,
                              char **report,
                              bool *pass);

/**
 * Releases a cover. Null is ignored.
 *
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void ap_cover_free(struct ApCover *c);

/**
 * Runs a named check. `params_json` is a JSON object of parameters, or null for defaults.
 *
 * `out` receives the full check result as JSON and `passed` its verdict.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `params_json` null or NUL-terminated; `out` and
 * `passed` valid for writes.
 */
enum ApStatus ap_run_check_json(const char *id, const char *params_json, char **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANTIPODAL_H */
