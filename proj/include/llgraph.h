/* C interface to the locally-linear graph library.
 *
 * All functions return llg_status; LLG_OK means success. Failure details are
 * kept per thread and readable through llg_last_error() until the next call.
 * Graphs are opaque handles freed with llg_graph_free; strings and index
 * buffers returned through out-parameters are freed with llg_string_free and
 * llg_index_free.
 */
#ifndef LLGRAPH_H
#define LLGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct llg_graph llg_graph;

typedef enum llg_status {
    LLG_OK = 0,
    LLG_ERR_INVALID_ARGUMENT,
    LLG_ERR_PARSE,
    LLG_ERR_ENDPOINT_OUT_OF_RANGE,
    LLG_ERR_SELF_LOOP,
    LLG_ERR_NOT_LOCALLY_LINEAR,
    LLG_ERR_TOO_SMALL,
    LLG_ERR_UNSUPPORTED_LENGTH,
    LLG_ERR_INVALID_STAR,
    LLG_ERR_NOT_CLUSTER_NEIGHBORHOOD,
    LLG_ERR_TOO_MANY_PARTS,
    LLG_ERR_GLUING_CONTRADICTION,
    LLG_ERR_BIJECTION_FAILURE,
    LLG_ERR_INVALID_PARAM,
    LLG_ERR_RETRY_EXHAUSTED,
    LLG_ERR_SEARCH_EXHAUSTED,
    LLG_ERR_ODD_DEGREE,
    LLG_ERR_IO,
    LLG_ERR_INTERNAL
} llg_status;

/* Stable name of a status value, e.g. "NotLocallyLinear". */
const char* llg_status_name(llg_status s);

/* Detail text of the most recent failure on this thread ("" if none). */
const char* llg_last_error(void);

void llg_string_free(char* s);
void llg_index_free(uint32_t* p);

/* --- construction ------------------------------------------------------- */

/* edges: 2*edge_count endpoints, pairs (edges[2i], edges[2i+1]). */
llg_status llg_graph_create(uint32_t n, const uint32_t* edges, size_t edge_count,
                            llg_graph** out);
/* First line "n m", then one "u v" line per edge; '#' comments allowed. */
llg_status llg_graph_parse(const char* text, llg_graph** out);
llg_status llg_graph_load(const char* path, llg_graph** out);
void llg_graph_free(llg_graph* g);

uint32_t llg_graph_vertex_count(const llg_graph* g);
size_t llg_graph_edge_count(const llg_graph* g);
llg_status llg_graph_format(const llg_graph* g, char** text);
llg_status llg_graph_format_dot(const llg_graph* g, char** text);

/* family: "paley9", "snake", "friendship", "random_cactus",
 * "random_locally_linear". t is ignored by paley9; merge_bias and seed apply
 * to the random families only. */
llg_status llg_generate(const char* family, uint32_t t, double merge_bias, uint64_t seed,
                        llg_graph** out);

/* --- checks and transforms ---------------------------------------------- */

/* *is_locally_linear is 1/0; on 0, *witness (if non-NULL) describes why. */
llg_status llg_check_locally_linear(const llg_graph* g, int* is_locally_linear, char** witness);

/* Triangle graph. *triangles (optional) receives 3*(*triangle_count) vertex
 * ids, triangle i at positions 3i..3i+2; star vertex i is triangle i. */
llg_status llg_star(const llg_graph* g, llg_graph** star, uint32_t** triangles,
                    size_t* triangle_count);

/* Diamond-free and K_{1,4}-free test. On 0, *violation describes a witness. */
llg_status llg_is_valid_star(const llg_graph* h, int* valid, char** violation);

/* Inverse construction: the locally linear graph whose triangle graph is h. */
llg_status llg_reconstruct(const llg_graph* h, llg_graph** base);

/* Spectral identity between the characteristic polynomials of G and G*. */
llg_status llg_theorem_holds(const llg_graph* g, int* holds);

/* Isomorphism with certificate: *mapping (optional, length = vertex count of
 * a) sends vertices of a to vertices of b when *isomorphic is 1. */
llg_status llg_isomorphic(const llg_graph* a, const llg_graph* b, int* isomorphic,
                          uint32_t** mapping, size_t* mapping_len);

/* --- CLI-grade text reports (byte-deterministic) ------------------------ */

llg_status llg_report_verify(const llg_graph* g, int* ok, char** text);
llg_status llg_report_star(const llg_graph* g, char** text);
llg_status llg_report_charpoly(const llg_graph* g, char** text);
llg_status llg_report_theorem(const llg_graph* g, char** text);
llg_status llg_report_census(const llg_graph* g, char** text);
llg_status llg_report_reconstruct(const llg_graph* h, char** text);
llg_status llg_report_roundtrip(const llg_graph* g, int* ok, char** text);

/* Hexagon counterexamples: two graphs whose C6 censuses break in opposite
 * directions. Edge-list texts to be written at the given paths, plus the
 * combined report that names those paths. */
llg_status llg_hexagon_fixtures(const char* base_path, const char* star_path,
                                char** base_edge_text, char** star_edge_text, char** report);

#ifdef __cplusplus
}
#endif

#endif
