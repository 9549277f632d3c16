/* cutlab C API: opaque handles, integer status codes, thread-local last error. */
#ifndef CUTLAB_CUTLAB_H
#define CUTLAB_CUTLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CUTLAB_BUILDING)
#define CUTLAB_API __declspec(dllexport)
#else
#define CUTLAB_API __declspec(dllimport)
#endif
#else
#define CUTLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cutlab_status {
  CUTLAB_OK = 0,
  CUTLAB_INVALID_ARGUMENT = 1,
  CUTLAB_INFEASIBLE = 2,
  CUTLAB_PRECONDITION = 3,
  CUTLAB_SIZE_CAP = 4,
  CUTLAB_ENCODING_FAILED = 5,
  CUTLAB_IO = 6,
  CUTLAB_INCONSISTENT_ORACLE = 7,
  CUTLAB_INTERNAL = 99
} cutlab_status;

typedef struct cutlab_graph cutlab_graph;               /* directed, weighted */
typedef struct cutlab_cut_oracle cutlab_cut_oracle;     /* cut-value queries */
typedef struct cutlab_local_oracle cutlab_local_oracle; /* degree/neighbor/pair queries */

CUTLAB_API const char* cutlab_version(void);
/* Message of the last failing call on this thread; "" after success. */
CUTLAB_API const char* cutlab_last_error(void);
/* Frees strings returned through char** out-parameters. */
CUTLAB_API void cutlab_string_free(char* s);

/* Graphs. Vertices are 0..n-1. */
CUTLAB_API cutlab_status cutlab_graph_create(uint32_t n, cutlab_graph** out);
CUTLAB_API cutlab_status cutlab_graph_load(const char* path, cutlab_graph** out);
CUTLAB_API cutlab_status cutlab_graph_save(const cutlab_graph* g, const char* path);
CUTLAB_API void cutlab_graph_free(cutlab_graph* g);
CUTLAB_API cutlab_status cutlab_graph_add_edge(cutlab_graph* g, uint32_t from, uint32_t to,
                                               double weight);
CUTLAB_API cutlab_status cutlab_graph_vertex_count(const cutlab_graph* g, size_t* out);
CUTLAB_API cutlab_status cutlab_graph_edge_count(const cutlab_graph* g, size_t* out);
/* Weight of edges leaving the set `members`. */
CUTLAB_API cutlab_status cutlab_graph_cut_weight(const cutlab_graph* g, const uint32_t* members,
                                                 size_t count, double* out);
/* Global min cut of the symmetrised graph; side may be NULL, else receives
   n flags (1 = on vertex 0's side). */
CUTLAB_API cutlab_status cutlab_graph_min_cut(const cutlab_graph* g, double* value,
                                              uint8_t* side);

/* Cut oracles: "exact", "noise:<eps'>[:hashed|fresh|signs=+-..]", "sparsifier:<p>". */
CUTLAB_API cutlab_status cutlab_cut_oracle_create(const cutlab_graph* g, const char* spec,
                                                  uint64_t seed, cutlab_cut_oracle** out);
CUTLAB_API void cutlab_cut_oracle_free(cutlab_cut_oracle* o);
CUTLAB_API cutlab_status cutlab_cut_oracle_query(cutlab_cut_oracle* o, const uint32_t* members,
                                                 size_t count, double* out);
CUTLAB_API cutlab_status cutlab_cut_oracle_query_count(const cutlab_cut_oracle* o,
                                                       uint64_t* out);

/* Local query oracle over an undirected simple graph given as edge pairs. */
CUTLAB_API cutlab_status cutlab_local_oracle_create(uint32_t n, const uint32_t* endpoints,
                                                    size_t edge_count,
                                                    cutlab_local_oracle** out);
CUTLAB_API void cutlab_local_oracle_free(cutlab_local_oracle* o);
CUTLAB_API cutlab_status cutlab_local_degree(cutlab_local_oracle* o, uint32_t v, size_t* out);
/* i is 1-based; *found = 0 when i exceeds the degree. */
CUTLAB_API cutlab_status cutlab_local_neighbor(cutlab_local_oracle* o, uint32_t v, size_t i,
                                               uint32_t* out, int* found);
CUTLAB_API cutlab_status cutlab_local_adjacent(cutlab_local_oracle* o, uint32_t u, uint32_t v,
                                               int* out);
CUTLAB_API cutlab_status cutlab_local_counts(const cutlab_local_oracle* o, uint64_t* degree,
                                             uint64_t* neighbor, uint64_t* adjacency);
/* Runs the estimator on the oracle; options_json as for cutlab_run. */
CUTLAB_API cutlab_status cutlab_local_estimate(cutlab_local_oracle* o, double eps,
                                               const char* options_json, double* k_hat);

/* Experiments. options_json (may be NULL):
   {"seed":u64, "preset":"desk"|"paper", "constants":"<file>", "jobs":int, "timing":bool}.
   cutlab_run writes JSONL; cutlab_sweep writes CSV. grid_json maps keys to value arrays. */
CUTLAB_API cutlab_status cutlab_run(const char* command, const char* params_json,
                                    const char* options_json, char** out);
CUTLAB_API cutlab_status cutlab_sweep(const char* command, const char* base_json,
                                      const char* grid_json, const char* options_json, char** out);
/* Newline-separated command names. */
CUTLAB_API cutlab_status cutlab_commands(char** out);

typedef void (*cutlab_criterion_cb)(void* user, int id, const char* name, int passed,
                                    double seconds, const char* line);
/* Runs the acceptance criteria; cb (may be NULL) fires once per criterion. */
CUTLAB_API cutlab_status cutlab_selftest(int quick, unsigned jobs, cutlab_criterion_cb cb,
                                         void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
