#ifndef TWOPAR_H
#define TWOPAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TpStatus {
  TP_STATUS_OK = 0,
  TP_STATUS_NULL_ARGUMENT = 1,
  TP_STATUS_INVALID_UTF8 = 2,
  TP_STATUS_PARSE = 3,
  TP_STATUS_ZERO_LAMBDA = 4,
  TP_STATUS_BAD_WORD = 5,
  TP_STATUS_DEPTH_EXCEEDED = 6,
  TP_STATUS_WRONG_REGION = 7,
  TP_STATUS_CONSTRUCTION_FAILED = 8,
  TP_STATUS_NOT_FOUND = 9,
  TP_STATUS_INTERNAL = 10,
  TP_STATUS_INVALID_ARGUMENT = 11,
} TpStatus;

/**
 * Opaque marked group `<S, T>`.
 */
typedef struct TpGroup TpGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *tp_version(void);

/**
 * Message of the last failure on this thread, or NULL. Valid until the
 * next call into the library on the same thread.
 */
const char *tp_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void tp_string_free(char *s);

/**
 * Build the group for `lambda`. Writes a new handle to `out`.
 *
 * # Safety
 * `lambda` must be a NUL-terminated string; `out` must be writable.
 */
enum TpStatus tp_group_new(const char *lambda, struct TpGroup **out);

/**
 * # Safety
 * `g` must be NULL or a handle from [`tp_group_new`] not yet freed.
 */
void tp_group_free(struct TpGroup *g);

/**
 * 1 if the group's matrices are exact, 0 if floating, -1 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
int32_t tp_group_is_exact(const struct TpGroup *g);

/**
 * Trace identities of the group as JSON.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TpStatus tp_group_trace_identities_json(const struct TpGroup *g, char **out);

/**
 * Matrix of a word in `S, s, T, t` as JSON.
 *
 * # Safety
 * `g` must be a live handle, `word` NUL-terminated, `out` writable.
 */
enum TpStatus tp_group_word_json(const struct TpGroup *g, const char *word, char **out);

/**
 * Tower element `P_i` as JSON.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TpStatus tp_group_tower_json(const struct TpGroup *g, uint32_t i, char **out);

/**
 * Whitehead-link analysis as JSON.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TpStatus tp_group_whitehead_json(const struct TpGroup *g, char **out);

/**
 * Region report for `lambda` as JSON.
 *
 * # Safety
 * `lambda` must be NUL-terminated; `out` must be writable.
 */
enum TpStatus tp_classify_json(const char *lambda, char **out);

/**
 * Certificate for `lambda` as JSON. Returns `NotFound` when no
 * certificate exists up to `max_depth`; `out` is then untouched.
 *
 * # Safety
 * `lambda` must be NUL-terminated; `out` must be writable.
 */
enum TpStatus tp_certify_json(const char *lambda, uint32_t max_depth, char **out);

/**
 * `f^n(z)` as a JSON complex value.
 *
 * # Safety
 * `z` must be NUL-terminated; `out` must be writable.
 */
enum TpStatus tp_f_iter_json(const char *z, uint32_t n, char **out);

/**
 * Schottky index of `lambda`: writes `n` and returns `Ok`, or returns
 * `NotFound` when no iterate reaches the classical region.
 *
 * # Safety
 * `lambda` must be NUL-terminated; `n` must be writable.
 */
enum TpStatus tp_schottky_index(const char *lambda, uint32_t *n);

/**
 * Parameter-plane figure as SVG. With `preimage_depth > 0` the
 * tessellation figure is drawn instead.
 *
 * # Safety
 * `out` must be writable.
 */
enum TpStatus tp_curves_svg(size_t samples, uint32_t preimage_depth, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWOPAR_H */
