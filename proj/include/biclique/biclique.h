/*
 * C interface to the biclique library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every fallible call returns a bq_status; on failure bq_last_error() holds a
 * message for the calling thread until its next failing call. Vertex ids are
 * 0-based uint32_t values of the base graph.
 */
#ifndef BICLIQUE_BICLIQUE_H_
#define BICLIQUE_BICLIQUE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BQ_API __declspec(dllexport)
#else
#define BQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bq_status {
  BQ_OK = 0,
  BQ_ERR_INVALID_ARGUMENT = 1,
  BQ_ERR_PARSE = 2,
  BQ_ERR_IO = 3,
  BQ_ERR_NO_BICLIQUE = 4,
  BQ_ERR_ORACLE_GUARD = 5,
  BQ_ERR_OVERFLOW = 6,
  BQ_ERR_INTERNAL = 99
} bq_status;

typedef enum bq_format { BQ_FORMAT_EDGES = 0, BQ_FORMAT_DIMACS = 1 } bq_format;

typedef enum bq_order { BQ_ORDER_INPUT = 0, BQ_ORDER_DEGENERACY = 1 } bq_order;

typedef enum bq_model { BQ_MODEL_GNP = 0, BQ_MODEL_REGULAR = 1 } bq_model;

/* Passing NULL wherever options are accepted means input order, sequential. */
typedef struct bq_options {
  bq_order order;
  unsigned threads; /* 0 or 1: sequential */
} bq_options;

typedef struct bq_graph bq_graph;
typedef struct bq_biclique bq_biclique;
typedef struct bq_count_report bq_count_report;

/* Receives one biclique per call, canonical side first, both sides ascending.
 * The arrays are only valid during the call. */
typedef void (*bq_biclique_fn)(const uint32_t* x, size_t x_len, const uint32_t* y, size_t y_len, void* user);

BQ_API const char* bq_last_error(void);
BQ_API const char* bq_status_name(bq_status status);

/* ---- graphs ---- */

/* `endpoints` holds 2 * num_edges ids, pairwise (u0, v0, u1, v1, ...). */
BQ_API bq_status bq_graph_create(size_t n, const uint32_t* endpoints, size_t num_edges, bq_graph** out);
BQ_API bq_status bq_graph_load(const char* path, bq_format format, bq_graph** out);
BQ_API bq_status bq_graph_parse(const char* text, size_t length, bq_format format, bq_graph** out);
BQ_API bq_status bq_graph_generate(bq_model model, size_t n, size_t max_degree, uint64_t seed, bq_graph** out);
/* Bipartite double cover: x keeps id x, its copy is x + n. */
BQ_API bq_status bq_graph_double_cover(const bq_graph* graph, bq_graph** out);
BQ_API void bq_graph_free(bq_graph* graph);

BQ_API size_t bq_graph_num_vertices(const bq_graph* graph);
BQ_API size_t bq_graph_num_edges(const bq_graph* graph);
BQ_API size_t bq_graph_max_degree(const bq_graph* graph);

/* Copies up to `capacity` edges (u < v, ascending) into `endpoints` as pairs;
 * returns the total edge count. */
BQ_API size_t bq_graph_edges(const bq_graph* graph, uint32_t* endpoints, size_t capacity);

/* Serializes as "n <count>" plus "u v" lines. Release with bq_string_free. */
BQ_API bq_status bq_graph_to_text(const bq_graph* graph, char** out);
BQ_API void bq_string_free(char* text);

/* ---- maximal biclique enumeration ---- */

BQ_API bq_status bq_enumerate(const bq_graph* graph, const bq_options* options, bq_biclique_fn callback, void* user,
                              uint64_t* count);

/* ---- maximum biclique ---- */

/* BQ_ERR_NO_BICLIQUE on an edgeless graph. */
BQ_API bq_status bq_find_max(const bq_graph* graph, const bq_options* options, bq_biclique** out);

BQ_API size_t bq_biclique_size(const bq_biclique* biclique);
/* side 0 is the canonical side (holds the smallest id), side 1 the other. */
BQ_API const uint32_t* bq_biclique_side(const bq_biclique* biclique, int side, size_t* length);
/* Rank (1-based) of the anchor whose local subgraph produced the biclique, or 0. */
BQ_API size_t bq_biclique_anchor_rank(const bq_biclique* biclique);
BQ_API void bq_biclique_free(bq_biclique* biclique);

/* ---- counting ---- */

/* BQ_ERR_NO_BICLIQUE on an edgeless graph. */
BQ_API bq_status bq_count_max(const bq_graph* graph, const bq_options* options, bq_count_report** out);
/* All bicliques (maximal or not) with exactly `size` vertices; size >= 2. */
BQ_API bq_status bq_count_size(const bq_graph* graph, const bq_options* options, size_t size, bq_count_report** out);

BQ_API size_t bq_count_report_size(const bq_count_report* report);
BQ_API uint64_t bq_count_report_count(const bq_count_report* report);
BQ_API size_t bq_count_report_num_anchors(const bq_count_report* report);
/* Contribution of the anchor at `rank` (1-based); 0 when out of range. */
BQ_API uint64_t bq_count_report_anchor(const bq_count_report* report, size_t rank);
BQ_API void bq_count_report_free(bq_count_report* report);

/* ---- exhaustive reference implementations (small graphs only) ---- */

BQ_API size_t bq_oracle_max_vertices(void);
BQ_API bq_status bq_oracle_enumerate(const bq_graph* graph, bq_biclique_fn callback, void* user, uint64_t* count);
BQ_API bq_status bq_oracle_max(const bq_graph* graph, bq_biclique** out);
BQ_API bq_status bq_oracle_count(const bq_graph* graph, size_t size, int maximal_only, uint64_t* count);

#ifdef __cplusplus
}
#endif

#endif /* BICLIQUE_BICLIQUE_H_ */
