/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef DEGTREE_H
#define DEGTREE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DtStatus {
  DT_STATUS_OK = 0,
  DT_STATUS_NULL_POINTER = 1,
  DT_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The instance failed validation.
   */
  DT_STATUS_MALFORMED = 3,
  /**
   * The solver reported a broken internal invariant.
   */
  DT_STATUS_INTERNAL = 4,
  /**
   * Output buffer too small; the required length was still written.
   */
  DT_STATUS_BUFFER_TOO_SMALL = 5,
  DT_STATUS_PANIC = 6,
} DtStatus;

typedef enum DtVerdict {
  DT_VERDICT_FEASIBLE = 0,
  DT_VERDICT_INFEASIBLE = 1,
} DtVerdict;

typedef enum DtCondition {
  /**
   * `sum alpha(S) <= |S| + |N(S)| - 1` fails.
   */
  DT_CONDITION_ALPHA = 0,
  /**
   * `sum beta(S) >= components(G - S) + |S| - 1` fails.
   */
  DT_CONDITION_BETA = 1,
} DtCondition;

/**
 * An instance under construction. Validated when solved.
 */
typedef struct DtInstance DtInstance;

/**
 * The answer for one instance.
 */
typedef struct DtOutcome DtOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a success.
 * The pointer stays valid until the next call into this library.
 */
const char *dt_last_error(void);

/**
 * Creates an instance with `n` vertices, no edges and no bounds.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum DtStatus dt_instance_new(size_t n, struct DtInstance **out);

/**
 * Parses an instance from JSON text and validates it.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DtStatus dt_instance_from_json(const char *json, struct DtInstance **out);

/**
 * Adds edge `{u, v}` with weight `w`; its index is written to `index_out` if non-null.
 *
 * # Safety
 * `inst` must come from this library; `index_out` may be null.
 */
enum DtStatus dt_instance_add_edge(struct DtInstance *inst,
                                   size_t u,
                                   size_t v,
                                   int64_t w,
                                   size_t *index_out);

/**
 * Requires `alpha <= deg_T(v) <= beta`. Bounded vertices must be pairwise
 * non-adjacent; this is checked by [`dt_solve`].
 *
 * # Safety
 * `inst` must come from this library.
 */
enum DtStatus dt_instance_constrain(struct DtInstance *inst,
                                    size_t v,
                                    uint32_t alpha,
                                    uint32_t beta);

/**
 * Releases an instance. Null is ignored.
 *
 * # Safety
 * `inst` must come from this library and not be used afterwards.
 */
void dt_instance_free(struct DtInstance *inst);

/**
 * Solves the instance: a minimum-cost tree within the bounds, or a certificate.
 *
 * # Safety
 * `inst` must come from this library; `out` must be writable.
 */
enum DtStatus dt_solve(const struct DtInstance *inst, struct DtOutcome **out);

/**
 * # Safety
 * `out` must come from this library; `verdict` must be writable.
 */
enum DtStatus dt_outcome_verdict(const struct DtOutcome *out, enum DtVerdict *verdict);

/**
 * Total weight of the tree. Fails on an infeasible outcome.
 *
 * # Safety
 * `out` must come from this library; `cost` must be writable.
 */
enum DtStatus dt_outcome_cost(const struct DtOutcome *out, int64_t *cost);

/**
 * Sorted edge indices of the tree. Writes the length to `len_out` even
 * when `cap` is too small; call with `cap = 0` to query it.
 *
 * # Safety
 * `buf` must hold `cap` elements; `len_out` must be writable.
 */
enum DtStatus dt_outcome_tree_edges(const struct DtOutcome *out,
                                    size_t *buf,
                                    size_t cap,
                                    size_t *len_out);

/**
 * The violated condition and both sides of the inequality. Fails on a feasible outcome.
 *
 * # Safety
 * `out` must come from this library; the three output pointers must be writable.
 */
enum DtStatus dt_outcome_certificate(const struct DtOutcome *out,
                                     enum DtCondition *condition,
                                     int64_t *lhs,
                                     int64_t *rhs);

/**
 * Sorted vertices of the violating set `S`, with the same buffer protocol
 * as [`dt_outcome_tree_edges`].
 *
 * # Safety
 * `buf` must hold `cap` elements; `len_out` must be writable.
 */
enum DtStatus dt_outcome_witness(const struct DtOutcome *out,
                                 size_t *buf,
                                 size_t cap,
                                 size_t *len_out);

/**
 * The result as JSON, identical to the command-line output. Release with [`dt_string_free`].
 *
 * # Safety
 * `out` must come from this library; `json` must be writable.
 */
enum DtStatus dt_outcome_to_json(const struct DtOutcome *out, char **json);

/**
 * Releases an outcome. Null is ignored.
 *
 * # Safety
 * `out` must come from this library and not be used afterwards.
 */
void dt_outcome_free(struct DtOutcome *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void dt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEGTREE_H */
