#ifndef ROOKERY_H
#define ROOKERY_H

/* Generated by cbindgen from the rookery-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum RkStatus {
  RK_STATUS_OK = 0,
  // A pointer argument was null or a scalar argument out of range.
  RK_STATUS_INVALID_ARGUMENT = 1,
  // The input text or instance failed validation.
  RK_STATUS_INVALID_INPUT = 2,
  // An enumeration cap or size limit was exceeded.
  RK_STATUS_TOO_LARGE = 3,
  // The operation's mathematical precondition does not hold.
  RK_STATUS_UNSUPPORTED = 4,
  // An internal consistency check failed.
  RK_STATUS_INTERNAL = 5,
} RkStatus;

// Opaque simplicial complex handle.
typedef struct RkComplex RkComplex;

// Opaque discrete-vector-field handle; owns its complex and the derived
// critical-cell list.
typedef struct RkMorse RkMorse;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *rk_last_error_message(void);

// Releases a string returned by the library.
//
// # Safety
// `s` must have been returned by a rookery function and not freed yet.
void rk_string_free(char *s);

// Parses the facet-list text format (`m <ground>` header, one facet per
// line with 1-based vertices, `void` sentinel for the void complex).
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` a valid pointer.
enum RkStatus rk_complex_parse(const char *text, struct RkComplex **out);

// The standard chessboard complex on `cols` x `rows`.
//
// # Safety
// `out` must be a valid pointer.
enum RkStatus rk_complex_chessboard(size_t cols, size_t rows, struct RkComplex **out);

// The multiple chessboard complex with per-row caps `row_caps[0..rows]`
// and per-column caps `col_caps[0..cols]`.
//
// # Safety
// The cap arrays must hold at least `rows` and `cols` entries; `out`
// must be valid.
enum RkStatus rk_complex_multiple_chessboard(size_t cols,
                                             size_t rows,
                                             const size_t *row_caps,
                                             const size_t *col_caps,
                                             struct RkComplex **out);

// The Alexander dual.
//
// # Safety
// `complex` must be a live handle; `out` valid.
enum RkStatus rk_complex_dual(const struct RkComplex *complex, struct RkComplex **out);

// The Bier sphere of the complex, on twice the ground set.
//
// # Safety
// `complex` must be a live handle; `out` valid.
enum RkStatus rk_complex_bier(const struct RkComplex *complex, struct RkComplex **out);

// Releases a complex handle.
//
// # Safety
// `complex` must come from this library and not be freed twice.
void rk_complex_free(struct RkComplex *complex);

// Ground-set size; 0 for a null handle.
//
// # Safety
// `complex` must be live or null.
size_t rk_complex_ground_size(const struct RkComplex *complex);

// Total number of faces, the empty face included.
//
// # Safety
// `complex` must be live or null.
size_t rk_complex_face_count(const struct RkComplex *complex);

// Euler characteristic (alternating f-vector sum).
//
// # Safety
// `complex` must be live or null.
int64_t rk_complex_euler(const struct RkComplex *complex);

// Copies the f-vector into `buf` and stores the entry count in
// `written`. Fails with `RK_STATUS_TOO_LARGE` when `buf_len` is too
// small; `written` then holds the required length.
//
// # Safety
// `buf` must hold `buf_len` entries; `written` must be valid.
enum RkStatus rk_complex_f_vector(const struct RkComplex *complex,
                                  uint64_t *buf,
                                  size_t buf_len,
                                  size_t *written);

// Serializes the complex into the facet-list format. Free the result
// with `rk_string_free`.
//
// # Safety
// `complex` must be live; `out` valid.
enum RkStatus rk_complex_to_text(const struct RkComplex *complex, char **out);

// Unreduced integer Betti numbers into `buf`; `torsion_free` reports
// whether every homology group is free.
//
// # Safety
// `buf` must hold `buf_len` entries; `written` and `torsion_free` valid.
enum RkStatus rk_betti(const struct RkComplex *complex,
                       uint64_t *buf,
                       size_t buf_len,
                       size_t *written,
                       bool *torsion_free);

// Whether reduced integer homology equals that of the d-sphere.
//
// # Safety
// `complex` must be live; `out` valid.
enum RkStatus rk_sphere_check(const struct RkComplex *complex, int64_t d, bool *out);

// Homological connectivity encoded as an integer: -2 for an empty
// realization, -1 for a disconnected complex, the largest degree c with
// vanishing reduced homology otherwise, and INT64_MAX when every reduced
// group vanishes.
//
// # Safety
// `complex` must be live; `out` valid.
enum RkStatus rk_homological_connectivity(const struct RkComplex *complex, int64_t *out);

// The two-step matching on the Bier sphere of the given base complex.
// Requires a nonvoid proper complex whose dual contains {1} and is not
// the empty-face-only complex (`RK_STATUS_UNSUPPORTED` otherwise).
//
// # Safety
// `base` must be live; `out` valid.
enum RkStatus rk_morse_bier(const struct RkComplex *base, struct RkMorse **out);

// The stepwise matching on a multiple chessboard complex; requires the
// cap inequality sum(l) >= sum(k) + rows - 1.
//
// # Safety
// Cap arrays sized as in `rk_complex_multiple_chessboard`; `out` valid.
enum RkStatus rk_morse_multiple_chessboard(size_t cols,
                                           size_t rows,
                                           const size_t *row_caps,
                                           const size_t *col_caps,
                                           struct RkMorse **out);

// Releases a matching handle.
//
// # Safety
// `morse` must come from this library and not be freed twice.
void rk_morse_free(struct RkMorse *morse);

// Number of matched pairs.
//
// # Safety
// `morse` must be live or null.
size_t rk_morse_pair_count(const struct RkMorse *morse);

// Number of critical cells.
//
// # Safety
// `morse` must be live or null.
size_t rk_morse_critical_count(const struct RkMorse *morse);

// Whether the matching has no closed gradient path.
//
// # Safety
// `morse` must be live or null.
bool rk_morse_is_acyclic(const struct RkMorse *morse);

// Copies the critical-cell dimensions (sorted ascending) into `buf`.
//
// # Safety
// `buf` must hold `buf_len` entries; `written` valid.
enum RkStatus rk_morse_critical_dims(const struct RkMorse *morse,
                                     int64_t *buf,
                                     size_t buf_len,
                                     size_t *written);

// The Forman-style connectivity lower bound; fails with
// `RK_STATUS_UNSUPPORTED` unless the matching has exactly one critical
// 0-cell.
//
// # Safety
// `morse` must be live; `out` valid.
enum RkStatus rk_morse_connectivity_certificate(const struct RkMorse *morse, int64_t *out);

// Solves the bottleneck problem on a clutter given as "1 2;1 3" style
// text and comma-separated rational weights. With `use_morse` the value
// is read off the Bier matching's top critical cell; otherwise brute
// force. The value is returned as an exact fraction, the element as a
// 1-based index.
//
// # Safety
// `clutter` and `weights` must be valid strings; out-pointers valid.
enum RkStatus rk_bottleneck_solve(size_t ground,
                                  const char *clutter,
                                  const char *weights,
                                  bool use_morse,
                                  int64_t *value_num,
                                  int64_t *value_den,
                                  size_t *element);

// Library version as a static string; do not free.
const char *rk_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ROOKERY_H */
