#ifndef TREERECON_H
#define TREERECON_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Returned by [`tr_crn`] when no three cards single the tree out.
 */
#define TR_CRN_EXCEEDS_THREE 4

typedef enum TrStatus {
  TR_STATUS_OK = 0,
  TR_STATUS_NULL_POINTER = 1,
  TR_STATUS_INVALID_INPUT = 2,
  TR_STATUS_OUT_OF_RANGE = 3,
  TR_STATUS_NO_CANDIDATE = 4,
  /**
   * Reconstruction accepted non-isomorphic candidates.
   */
  TR_STATUS_AMBIGUOUS_RECONSTRUCTION = 5,
  TR_STATUS_BUFFER_TOO_SMALL = 6,
  TR_STATUS_PANIC = 7,
} TrStatus;

typedef enum TrSuite {
  /**
   * Brush card pairs determine the tree.
   */
  TR_SUITE_BRUSH_RECONSTRUCTION = 0,
  /**
   * Leaves with isomorphic cards are similar.
   */
  TR_SUITE_LEAF_SIMILARITY = 1,
  /**
   * Near-leaves with isomorphic cards are similar.
   */
  TR_SUITE_NEAR_LEAF_SIMILARITY = 2,
  /**
   * crn is 1 exactly for starlike trees.
   */
  TR_SUITE_STARLIKE_CRN = 3,
  /**
   * Histogram of crn; trees with crn >= 3 are reported.
   */
  TR_SUITE_CRN_HISTOGRAM = 4,
} TrSuite;

/**
 * Opaque card index over all trees of one order.
 */
typedef struct TrCardIndex TrCardIndex;

/**
 * Opaque tree handle.
 */
typedef struct TrTree TrTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *tr_last_error(void);

/**
 * Library version as a static string.
 */
const char *tr_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void tr_string_free(char *s);

/**
 * Parses the tree text format (`n`, then `n - 1` lines `a b`).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TrStatus tr_tree_parse(const char *text, struct TrTree **out);

/**
 * Builds a tree on `n` vertices from `n - 1` edges stored as consecutive
 * `(a, b)` pairs in `edges` (length `2 * (n - 1)`).
 *
 * # Safety
 * `edges` must point to `2 * (n - 1)` readable values (may be NULL when
 * `n == 1`); `out` must be writable.
 */
enum TrStatus tr_tree_from_edges(size_t n, const size_t *edges, struct TrTree **out);

/**
 * # Safety
 * `tree` must be NULL or a handle from this library, not yet freed.
 */
void tr_tree_free(struct TrTree *tree);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `tree` must be NULL or a live handle.
 */
size_t tr_tree_order(const struct TrTree *tree);

/**
 * # Safety
 * `tree` must be a live handle; `out` must be writable.
 */
enum TrStatus tr_tree_to_text(const struct TrTree *tree, char **out);

/**
 * Canonical code of the free tree.
 *
 * # Safety
 * `tree` must be a live handle; `out` must be writable.
 */
enum TrStatus tr_tree_free_code(const struct TrTree *tree, char **out);

/**
 * Canonical code of the card obtained by deleting vertex `v`.
 *
 * # Safety
 * `tree` must be a live handle; `out` must be writable.
 */
enum TrStatus tr_tree_card(const struct TrTree *tree, size_t v, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum TrStatus tr_isomorphic(const struct TrTree *a, const struct TrTree *b, bool *out);

/**
 * # Safety
 * `tree` must be a live handle; `out` must be writable.
 */
enum TrStatus tr_tree_is_starlike(const struct TrTree *tree, bool *out);

/**
 * Writes `(leaf, root)` brush pairs as consecutive values into `pairs`,
 * which holds room for `capacity` pairs. `count` receives the total number
 * of pairs; [`TrStatus::BufferTooSmall`] is returned when it exceeds
 * `capacity`. Passing `pairs = NULL` with `capacity = 0` queries the count.
 *
 * # Safety
 * `pairs` must have room for `2 * capacity` values; `tree` must be a live
 * handle; `count` must be writable.
 */
enum TrStatus tr_tree_brush_pairs(const struct TrTree *tree,
                                  size_t *pairs,
                                  size_t capacity,
                                  size_t *count);

/**
 * Rebuilds a tree from the card of a brush leaf (`card_u`, tree or forest
 * text) and the card of its root (`card_v`, forest text).
 *
 * # Safety
 * Both strings must be NUL-terminated; `out` must be writable.
 */
enum TrStatus tr_reconstruct(const char *card_u,
                             const char *card_v,
                             bool checked,
                             struct TrTree **out);

/**
 * Builds the card index over all free trees on `n` vertices (`2 <= n <= 20`).
 *
 * # Safety
 * `out` must be writable.
 */
enum TrStatus tr_card_index_build(size_t n, size_t jobs, struct TrCardIndex **out);

/**
 * # Safety
 * `index` must be NULL or a live handle from [`tr_card_index_build`].
 */
void tr_card_index_free(struct TrCardIndex *index);

/**
 * Class reconstruction number of `tree` within `index`. `value` receives
 * 1..=3 or [`TR_CRN_EXCEEDS_THREE`]; when `witness` is non-NULL it receives
 * the witness cards joined by `,`.
 *
 * # Safety
 * Handles must be live; `value` must be writable; `witness` NULL or writable.
 */
enum TrStatus tr_crn(const struct TrCardIndex *index,
                     const struct TrTree *tree,
                     uint32_t *value,
                     char **witness);

/**
 * Runs one verification suite (a [`TrSuite`] value) at order `n`; `violations` receives the
 * number of counterexamples (for the crn histogram: trees with crn >= 3).
 *
 * # Safety
 * `violations` must be writable; `report` NULL or writable.
 */
enum TrStatus tr_verify(uint32_t suite, size_t n, size_t jobs, size_t *violations, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TREERECON_H */
