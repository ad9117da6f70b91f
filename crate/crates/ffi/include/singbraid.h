#ifndef SINGBRAID_H
#define SINGBRAID_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum SbStatus {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_POINTER = 1,
  SB_STATUS_INVALID_UTF8 = 2,
  SB_STATUS_SYNTAX = 3,
  SB_STATUS_OUT_OF_RANGE = 4,
  SB_STATUS_NOT_PURE = 5,
  SB_STATUS_FOREIGN_LETTER = 6,
  SB_STATUS_OVERFLOW = 7,
  SB_STATUS_PANIC = 8,
} SbStatus;

/**
 * A singular braid word on a fixed number of strands.
 */
typedef struct SbBraidWord SbBraidWord;

/**
 * A word over `a12 a13 a23 b12 b13 b23`.
 */
typedef struct SbSpWord SbSpWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failed call on this thread, or null.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *sb_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sb_string_free(char *s);

/**
 * Parses a word such as `s1 t2^-1 s1^3`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum SbStatus sb_braid_parse(const char *text, size_t strands, struct SbBraidWord **out);

/**
 * # Safety
 * `w` must be null or a handle from this library, not yet freed.
 */
void sb_braid_free(struct SbBraidWord *w);

/**
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_braid_to_string(const struct SbBraidWord *w, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a writable pointer.
 */
enum SbStatus sb_braid_concat(const struct SbBraidWord *a,
                              const struct SbBraidWord *b,
                              struct SbBraidWord **out);

/**
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_braid_invert(const struct SbBraidWord *w, struct SbBraidWord **out);

/**
 * Decides triviality of a 3-strand word.
 *
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_braid_is_trivial(const struct SbBraidWord *w, bool *out);

/**
 * Quotient invariants only; `false` proves nontriviality, `true` proves
 * nothing.
 *
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_braid_necessary_trivial(const struct SbBraidWord *w, bool *out);

/**
 * Rewrites a pure 3-strand word into the six-letter alphabet.
 *
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_braid_rewrite(const struct SbBraidWord *w, struct SbSpWord **out);

/**
 * Parses a word such as `a12 b13^-1`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum SbStatus sb_sp_parse(const char *text, struct SbSpWord **out);

/**
 * # Safety
 * `w` must be null or a handle from this library, not yet freed.
 */
void sb_sp_free(struct SbSpWord *w);

/**
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_sp_to_string(const struct SbSpWord *w, char **out);

/**
 * Normal form rendered as `d^<k> | <hnn form>`, or `1`.
 *
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_sp_normal_form(const struct SbSpWord *w, char **out);

/**
 * # Safety
 * `w` must be a live handle and `out` a writable pointer.
 */
enum SbStatus sb_sp_is_trivial(const struct SbSpWord *w, bool *out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a writable pointer.
 */
enum SbStatus sb_sp_equal(const struct SbSpWord *a, const struct SbSpWord *b, bool *out);

/**
 * Computes `g^-1 w g` for a letter such as `t1` or `s2^-1`.
 *
 * # Safety
 * `w` must be a live handle, `letter` a NUL-terminated string and `out` a
 * writable pointer.
 */
enum SbStatus sb_sp_conjugate(const struct SbSpWord *w, const char *letter, struct SbSpWord **out);

/**
 * Runs the full presentation check suite.
 *
 * # Safety
 * `passed` and `total` must be writable pointers.
 */
enum SbStatus sb_verify(size_t *passed, size_t *total);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SINGBRAID_H */
