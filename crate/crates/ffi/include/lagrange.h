#ifndef LAGRANGE_H
#define LAGRANGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every function.
 */
typedef enum LagrangeStatus {
  LAGRANGE_STATUS_OK = 0,
  LAGRANGE_STATUS_NULL_POINTER = 1,
  LAGRANGE_STATUS_INVALID_UTF8 = 2,
  LAGRANGE_STATUS_PARSE = 3,
  LAGRANGE_STATUS_INVALID_INPUT = 4,
  LAGRANGE_STATUS_CAP_EXCEEDED = 5,
  LAGRANGE_STATUS_PRECISION = 6,
  LAGRANGE_STATUS_UNSUPPORTED = 7,
  LAGRANGE_STATUS_COMPUTATION = 8,
  LAGRANGE_STATUS_PANIC = 9,
} LagrangeStatus;

/**
 * A permutation group.
 */
typedef struct LagrangeGroup LagrangeGroup;

/**
 * An integer polynomial.
 */
typedef struct LagrangePoly LagrangePoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *lagrange_last_error(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void lagrange_string_free(char *s);

/**
 * Parses `text` (`"x^4 - 2"` or a JSON list of coefficients, constant first).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LagrangeStatus lagrange_poly_parse(const char *text, struct LagrangePoly **out);

/**
 * # Safety
 * `p` must come from [`lagrange_poly_parse`] and not be freed twice.
 */
void lagrange_poly_free(struct LagrangePoly *p);

/**
 * Degree of `p`, or -1 for the zero polynomial or a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
int64_t lagrange_poly_degree(const struct LagrangePoly *p);

/**
 * Writes `p` in text form to `*out`; free with [`lagrange_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum LagrangeStatus lagrange_poly_to_string(const struct LagrangePoly *p, char **out);

/**
 * Identifies the Galois group of `p`; writes the report as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out_json` a valid pointer.
 */
enum LagrangeStatus lagrange_identify(const struct LagrangePoly *p,
                                      uint32_t max_rescues,
                                      char **out_json);

/**
 * Decides solvability by radicals of an irreducible quintic.
 *
 * # Safety
 * `p` must be a live handle and `out_solvable` a valid pointer.
 */
enum LagrangeStatus lagrange_solvable(const struct LagrangePoly *p, bool *out_solvable);

/**
 * Absolute resolvent of `p` by a builtin or expression invariant, as JSON.
 *
 * # Safety
 * `p` must be a live handle, `invariant` NUL-terminated, `out_json` valid.
 */
enum LagrangeStatus lagrange_resolvent(const struct LagrangePoly *p,
                                       const char *invariant,
                                       char **out_json);

/**
 * Parses a group: `S4`, `A5`, a catalog name, or `name := (1,2,3),(1,2)`.
 *
 * # Safety
 * `spec` must be NUL-terminated and `out` a valid pointer.
 */
enum LagrangeStatus lagrange_group_parse(const char *spec, struct LagrangeGroup **out);

/**
 * # Safety
 * `g` must come from [`lagrange_group_parse`] and not be freed twice.
 */
void lagrange_group_free(struct LagrangeGroup *g);

/**
 * Order of `g`, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t lagrange_group_order(const struct LagrangeGroup *g);

/**
 * Partition and group matrices of `g` as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out_json` a valid pointer.
 */
enum LagrangeStatus lagrange_matrix_json(const struct LagrangeGroup *g, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAGRANGE_H */
