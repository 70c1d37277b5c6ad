#ifndef KNCURVES_H
#define KNCURVES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. Values 1 to 14 match the library's error kinds.
typedef enum KnStatus {
  KN_STATUS_OK = 0,
  KN_STATUS_INVALID_SURFACE = 1,
  KN_STATUS_ZERO_VECTOR = 2,
  KN_STATUS_DIMENSION_MISMATCH = 3,
  KN_STATUS_SYNTAX = 4,
  KN_STATUS_PARITY_VIOLATION = 5,
  KN_STATUS_INCONSISTENT_TRIANGLE = 6,
  KN_STATUS_UNREALIZABLE = 7,
  KN_STATUS_ENDPOINT_MISMATCH = 8,
  KN_STATUS_RANGE = 9,
  KN_STATUS_PARAMETER = 10,
  KN_STATUS_UNSUPPORTED_CURVE = 11,
  KN_STATUS_NONPRIMITIVE_CONTENT = 12,
  KN_STATUS_OVERFLOW = 13,
  KN_STATUS_NOT_EMBEDDED = 14,
  KN_STATUS_NULL_POINTER = 100,
  KN_STATUS_INVALID_UTF8 = 101,
  KN_STATUS_BUFFER_SIZE = 102,
  KN_STATUS_PANIC = 103,
} KnStatus;

// Dynnikov coordinates `(a; b; t; c)`.
typedef struct KnCoords KnCoords;

// Triangle coordinates `(alpha; beta; gamma; c)`.
typedef struct KnTriangle KnTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *kn_last_error(void);

// Parses the canonical text form. Pass `n = 0` to infer `n` from `b`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum KnStatus kn_coords_parse(const char *text, size_t n, struct KnCoords **out);

// Builds coordinates from `n - 1` entries of `a` and `n` entries of `b`.
//
// # Safety
// `a` and `b` must point to that many readable integers and `out` must be
// writable.
enum KnStatus kn_coords_new(size_t n,
                            const int64_t *a,
                            const int64_t *b,
                            int64_t t,
                            int64_t c1,
                            int64_t c2,
                            struct KnCoords **out);

// # Safety
// `coords` must come from this library and not be freed twice.
void kn_coords_free(struct KnCoords *coords);

// Number of punctures, or 0 for a null handle.
//
// # Safety
// `coords` must be null or a live handle.
size_t kn_coords_n(const struct KnCoords *coords);

// Canonical text form, to be released with [`kn_string_free`]. Null on a
// null handle.
//
// # Safety
// `coords` must be null or a live handle.
char *kn_coords_format(const struct KnCoords *coords);

// # Safety
// `s` must come from [`kn_coords_format`] and not be freed twice.
void kn_string_free(char *s);

// Triangle coordinates of the multicurve.
//
// # Safety
// `coords` must be a live handle and `out` writable.
enum KnStatus kn_invert(const struct KnCoords *coords, struct KnTriangle **out);

// Builds triangle coordinates from `2n - 2` entries of `alpha` and `n + 1`
// entries of `beta`, checking their shape and parity.
//
// # Safety
// `alpha` and `beta` must point to that many readable integers and `out`
// must be writable.
enum KnStatus kn_triangle_new(size_t n,
                              const int64_t *alpha,
                              const int64_t *beta,
                              int64_t gamma,
                              int64_t c1,
                              int64_t c2,
                              struct KnTriangle **out);

// # Safety
// `tri` must come from this library and not be freed twice.
void kn_triangle_free(struct KnTriangle *tri);

// Number of punctures, or 0 for a null handle.
//
// # Safety
// `tri` must be null or a live handle.
size_t kn_triangle_n(const struct KnTriangle *tri);

// Copies `alpha` (length `2n - 2`) into `out`.
//
// # Safety
// `tri` must be a live handle and `out` must hold `len` integers.
enum KnStatus kn_triangle_alpha(const struct KnTriangle *tri, int64_t *out, size_t len);

// Copies `beta` (length `n + 1`) into `out`.
//
// # Safety
// `tri` must be a live handle and `out` must hold `len` integers.
enum KnStatus kn_triangle_beta(const struct KnTriangle *tri, int64_t *out, size_t len);

// Writes `gamma`, `c1` and `c2`; any output pointer may be null.
//
// # Safety
// `tri` must be a live handle; non-null outputs must be writable.
enum KnStatus kn_triangle_scalars(const struct KnTriangle *tri,
                                  int64_t *gamma,
                                  int64_t *c1,
                                  int64_t *c2);

// Dynnikov coordinates of a triangle-coordinate vector.
//
// # Safety
// `tri` must be a live handle and `out` writable.
enum KnStatus kn_coordinatize(const struct KnTriangle *tri, struct KnCoords **out);

// Intersection number with an elementary curve named as in the CLI, for
// example `"Cij:1,2"`, `"Cprime2:2"`, `"C"` or `"D"`.
//
// # Safety
// `coords` must be a live handle, `curve` NUL-terminated and `out` writable.
enum KnStatus kn_intersect(const struct KnCoords *coords, const char *curve, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNCURVES_H */
