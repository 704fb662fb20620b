#ifndef DOMINION_H
#define DOMINION_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DomStatus {
  DomStatus_Ok = 0,
  DomStatus_NullPointer = 1,
  DomStatus_InvalidGraph = 2,
  DomStatus_Parse = 3,
  DomStatus_UnknownParameter = 4,
  DomStatus_Undefined = 5,
  DomStatus_BudgetExhausted = 6,
  DomStatus_InfeasibleWitness = 7,
  DomStatus_BufferTooSmall = 8,
  DomStatus_Unsupported = 9,
  DomStatus_InvalidArgument = 10,
} DomStatus;

/**
 * Opaque graph handle.
 */
typedef struct DomGraph DomGraph;

/**
 * Static description of a status code.
 */
const char *dom_status_message(enum DomStatus status);

/**
 * Number of parameters addressable by id.
 */
uint32_t dom_param_count(void);

/**
 * Canonical name of parameter `id`, or null when out of range.
 */
const char *dom_param_name(uint32_t id);

/**
 * Looks up a parameter id by name.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string.
 */
enum DomStatus dom_param_from_name(const char *name, uint32_t *out_id);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2m` endpoint
 * ids in `edges` (0-indexed).
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m` is 0).
 */
enum DomStatus dom_graph_new(uintptr_t n,
                             const uint32_t *edges,
                             uintptr_t m,
                             struct DomGraph **out);

/**
 * Parses a graph in `p edge n m` / `e u v` text form.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string.
 */
enum DomStatus dom_graph_from_text(const char *text, struct DomGraph **out);

/**
 * Builds a member of a named graph family.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string.
 */
enum DomStatus dom_graph_family(const char *family, uintptr_t size, struct DomGraph **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void dom_graph_free(struct DomGraph *g);

/**
 * Vertex count, 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uintptr_t dom_graph_order(const struct DomGraph *g);

/**
 * Edge count, 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uintptr_t dom_graph_size(const struct DomGraph *g);

/**
 * Exact value of parameter `id`. `budget` 0 selects the default node
 * budget. `*out_finite` is 0 when the parameter is undefined on the graph
 * (then `*out_value` is 0). When `witness` is non-null and `witness_len`
 * is large enough, an optimal witness is written there: integer values,
 * or label bitmasks (1 = a, 2 = b) for rainbow parameters, one per vertex
 * (one per edge for edge covers).
 *
 * # Safety
 * `g` must be a live handle; `witness` must point to `witness_len`
 * writable bytes when non-null.
 */
enum DomStatus dom_solve(const struct DomGraph *g,
                         uint32_t id,
                         uint64_t budget,
                         uint64_t *out_value,
                         uint8_t *out_finite,
                         uint8_t *witness,
                         uintptr_t witness_len);

/**
 * Checks a vertex witness of `len` values against parameter `id`.
 *
 * # Safety
 * `g` must be a live handle and `values` must point to `len` bytes.
 */
enum DomStatus dom_is_feasible(const struct DomGraph *g,
                               uint32_t id,
                               const uint8_t *values,
                               uintptr_t len,
                               uint8_t *out_feasible);

/**
 * Greedy approximation: weight and the proven ratio for the graph's
 * maximum degree.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum DomStatus dom_approximate(const struct DomGraph *g,
                               uint32_t id,
                               uint64_t *out_weight,
                               double *out_ratio);

/**
 * Number of bound-table inequalities violated on the graph (0 expected).
 *
 * # Safety
 * `g` must be a live handle.
 */
enum DomStatus dom_audit(const struct DomGraph *g, uint64_t budget, uintptr_t *out_violations);

#endif /* DOMINION_H */
