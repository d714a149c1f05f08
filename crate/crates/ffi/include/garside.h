#ifndef GARSIDE_H
#define GARSIDE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Sign with respect to the standard Dehornoy structure.
 */
typedef enum GsSign {
  GS_NEGATIVE = -1,
  GS_IN_G1 = 0,
  GS_POSITIVE = 1,
} GsSign;

/**
 * Status codes.
 */
typedef enum GsStatus {
  GS_OK = 0,
  GS_NULL_POINTER = 1,
  GS_INVALID_UTF8 = 2,
  GS_PARSE_ERROR = 3,
  GS_INVALID_PARAMETER = 4,
  GS_CONTEXT_MISMATCH = 5,
  GS_NOT_POSITIVE = 6,
  GS_FAILED = 7,
  GS_PANIC = 8,
} GsStatus;

/**
 * A group: `A_n` or `I₂(m)`.
 */
typedef struct GsContext GsContext;

/**
 * An element of the group of the context that created it.
 */
typedef struct GsElement GsElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the braid group `A_n` (n + 1 strands, n ≥ 2).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GsStatus gs_context_new_braid(uintptr_t n, struct GsContext **out);

/**
 * Creates the dihedral Artin group `I₂(m)`, m ≥ 4.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GsStatus gs_context_new_dihedral(uintptr_t m, struct GsContext **out);

/**
 * # Safety
 * `ctx` must come from a `gs_context_new_*` call and not be freed twice.
 */
void gs_context_free(struct GsContext *ctx);

/**
 * # Safety
 * `e` must come from this library and not be freed twice.
 */
void gs_element_free(struct GsElement *e);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void gs_string_free(char *s);

/**
 * The message of the last failure on this thread. Owned by the library;
 * valid until the next call on the same thread.
 */
const char *gs_last_error(void);

/**
 * Parses a word such as `"s1 s2^-1 D"` or `"s.t.s"`.
 *
 * # Safety
 * `ctx` and `out` must be valid; `text` must be a NUL-terminated string.
 */
enum GsStatus gs_element_parse(const struct GsContext *ctx,
                               const char *text,
                               struct GsElement **out);

/**
 * `out = a·b`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_element_multiply(const struct GsContext *ctx,
                                  const struct GsElement *a,
                                  const struct GsElement *b,
                                  struct GsElement **out);

/**
 * `out = a⁻¹`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_element_inverse(const struct GsContext *ctx,
                                 const struct GsElement *a,
                                 struct GsElement **out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_element_equal(const struct GsContext *ctx,
                               const struct GsElement *a,
                               const struct GsElement *b,
                               bool *out);

/**
 * Text of an element; release it with `gs_string_free`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_element_format(const struct GsContext *ctx, const struct GsElement *a, char **out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_sign(const struct GsContext *ctx, const struct GsElement *a, enum GsSign *out);

/**
 * Compares `a` and `b` in the left order selected by `epsilon`, one entry
 * of ±1 per level of the chain. Writes −1, 0 or 1.
 *
 * # Safety
 * All pointers must be valid; `epsilon` must hold `epsilon_len` entries.
 */
enum GsStatus gs_compare(const struct GsContext *ctx,
                         const int8_t *epsilon,
                         uintptr_t epsilon_len,
                         const struct GsElement *a,
                         const struct GsElement *b,
                         int32_t *out);

/**
 * Depth of a monoid element; `GS_NOT_POSITIVE` otherwise.
 *
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_depth(const struct GsContext *ctx, const struct GsElement *a, uintptr_t *out);

/**
 * Δ-form `a = unmovable · Δ^power`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum GsStatus gs_delta_form(const struct GsContext *ctx,
                            const struct GsElement *a,
                            struct GsElement **unmovable,
                            int64_t *power);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GARSIDE_H */
