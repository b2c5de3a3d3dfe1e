#ifndef ALMOST_CHORDAL_H
#define ALMOST_CHORDAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define AC_OK 0

#define AC_ERR_NULL_ARGUMENT -1

#define AC_ERR_INVALID_INPUT -2

#define AC_ERR_UTF8 -3

#define AC_ERR_PANIC -4

/**
 * Opaque graph handle: an immutable graph plus optional vertex weights.
 */
typedef struct AcGraph AcGraph;

/**
 * Description of the most recent error on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ac_last_error(void);

/**
 * Frees a string returned by this library.
 */
void ac_string_free(char *s);

/**
 * Builds a graph on `n` vertices from `m` edges given as 2m vertex ids
 * (1-based, as in graph files).
 */
int32_t ac_graph_from_edge_list(uint32_t n,
                                const uint32_t *edges_uv,
                                uintptr_t m,
                                struct AcGraph **out);

/**
 * Parses a graph file body (edge-list or DIMACS).
 */
int32_t ac_graph_parse(const char *text, struct AcGraph **out);

void ac_graph_free(struct AcGraph *g);

/**
 * Vertex count of a graph handle; negative on null.
 */
int64_t ac_graph_vertex_count(const struct AcGraph *g);

/**
 * Edge count of a graph handle; negative on null.
 */
int64_t ac_graph_edge_count(const struct AcGraph *g);

/**
 * Minimum chordal modulator within budget k, as JSON:
 * `{"within_budget": bool, "size": int, "pairs": [[u, v], ...]}`.
 */
int32_t ac_fillin(const struct AcGraph *g, uint32_t k, char **out_json);

/**
 * Nice k-almost chordal decomposition in the line-oriented text format,
 * or an error when the fill-in exceeds k.
 */
int32_t ac_decompose(const struct AcGraph *g, uint32_t k, char **out_text);

/**
 * Solves one of wis, wvc, oct, bipartite-subgraph, wfvs, induced-forest,
 * cvc over a decomposition with budget k. JSON:
 * `{"value": int, "witness": [labels...]}`.
 */
int32_t ac_solve(const struct AcGraph *g, const char *problem, uint32_t k, char **out_json);

/**
 * Runs the split-graph independent-set kernel. JSON:
 * `{"verdict": str, "threshold": int, "instance": str|null, "trace": [...]}`.
 */
int32_t ac_kernel_split_is(const struct AcGraph *g, int64_t ell, uint32_t k, char **out_json);

#endif /* ALMOST_CHORDAL_H */
