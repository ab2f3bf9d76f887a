/* C interface to the rigidity toolkit.
 *
 * Conventions:
 *   - Functions return rg_status; RG_OK means success. On failure the
 *     thread-local message from rg_last_error() describes the problem and
 *     output parameters are left untouched.
 *   - Strings returned through char** are heap-allocated; release them with
 *     rg_string_free(). Handles are released with their matching _free().
 *   - Graph codes cross the boundary as decimal strings, since they exceed
 *     64 bits from 12 vertices on.
 *   - All functions are thread-safe; handles must not be shared between
 *     threads without external synchronization.
 */

#ifndef RIGIDITY_H
#define RIGIDITY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rg_status {
    RG_OK = 0,
    RG_ERR_INVALID_ARGUMENT = 1, /* bad input: malformed code, range, ... */
    RG_ERR_RUNTIME = 2           /* internal failure                      */
} rg_status;

/* Thread-local message for the most recent failure in this thread. */
const char* rg_last_error(void);
void rg_string_free(char* s);
const char* rg_version(void);

/* ---- graphs and codec -------------------------------------------------- */

typedef struct rg_graph rg_graph;

rg_status rg_graph_decode(const char* code, int n, rg_graph** out);
/* endpoints holds 2*edge_count vertex indices: u0,v0,u1,v1,... */
rg_status rg_graph_from_edges(int n, const int* endpoints, int edge_count,
                              rg_graph** out);
void rg_graph_free(rg_graph* g);

rg_status rg_graph_encode(const rg_graph* g, char** code_out);
rg_status rg_graph_canonical_code(const rg_graph* g, char** code_out);
rg_status rg_infer_vertex_count(const char* code, int* n_out);

int rg_graph_vertex_count(const rg_graph* g);
int rg_graph_edge_count(const rg_graph* g);
rg_status rg_graph_edge(const rg_graph* g, int index, int* u_out, int* v_out);
rg_status rg_graph_has_edge(const rg_graph* g, int u, int v, int* out);
rg_status rg_graph_degree(const rg_graph* g, int vertex, int* degree_out);
rg_status rg_graph_is_isomorphic(const rg_graph* a, const rg_graph* b, int* out);

/* ---- structural analysis ----------------------------------------------- */

rg_status rg_is_laman(const rg_graph* g, int* out);
rg_status rg_satisfies_3d_count(const rg_graph* g, int* out);
rg_status rg_is_connected(const rg_graph* g, int* out);
rg_status rg_is_planar(const rg_graph* g, int* out);
/* found=0: no Hamiltonian cycle (cycle_out untouched). Otherwise cycle_out
 * (capacity >= vertex count) receives the cycle as a vertex order. */
rg_status rg_hamiltonian_cycle(const rg_graph* g, int* found, int* cycle_out);
rg_status rg_count_short_cycles(const rg_graph* g, long long* three_out,
                                long long* four_out);

/* ---- construction-step enumeration ------------------------------------- */

/* Canonical codes of every graph with at most max_n vertices reachable from
 * the dimension's base graph, streamed in (n, code) order. kinds is a
 * comma-separated list ("h1,h2a,h2b,h2c,vsplit" / "3d1,3d2,3d3x,3d3v"),
 * NULL for the dimension's default set. state_dir (optional) persists
 * per-level results and resumes interrupted runs. The callback returns
 * nonzero to continue, zero to stop early. */
rg_status rg_generate(int max_n, int dimension, const char* kinds, int jobs,
                      const char* state_dir,
                      int (*callback)(void* user, int n, const char* code),
                      void* user);

/* ---- realization counting ---------------------------------------------- */

typedef struct rg_count_config {
    uint32_t prime;       /* largest prime tried first            */
    uint32_t prime_floor; /* primes below this abort the protocol */
    int runs;             /* runs that must agree                 */
    int max_runs;         /* extra runs allowed on disagreement   */
    uint64_t seed;
    int preprocess;       /* nonzero: strip degree-d vertices     */
} rg_count_config;

void rg_count_config_default(rg_count_config* cfg);

typedef struct rg_count_result rg_count_result;

rg_status rg_count(const rg_graph* g, int dimension, const rg_count_config* cfg,
                   rg_count_result** out);
void rg_count_result_free(rg_count_result* r);

/* flexible=1: positive-dimensional system, no finite count. */
int rg_count_result_flexible(const rg_count_result* r);
/* agreed=1: the required number of runs returned the same value. */
int rg_count_result_agreed(const rg_count_result* r);
/* Fails with RG_ERR_RUNTIME when the graph is flexible. */
rg_status rg_count_result_value(const rg_count_result* r, uint64_t* out);
/* 2^k factor collected by preprocessing. */
uint64_t rg_count_result_factor(const rg_count_result* r);
int rg_count_result_run_count(const rg_count_result* r);
/* raw_out receives the run's quotient dimension, or UINT64_MAX if the run
 * found a positive-dimensional system. */
rg_status rg_count_result_run(const rg_count_result* r, int index,
                              uint32_t* prime_out, uint64_t* seed_out,
                              uint64_t* raw_out, int* flexible_out,
                              int* degenerate_out);
/* Vertices removed by preprocessing, in removal order; returns the count and
 * fills up to capacity entries. */
int rg_count_result_removed(const rg_count_result* r, int* out, int capacity);
/* Pinned vertices of the final system (input labels). */
int rg_count_result_pinned(const rg_count_result* r, int* out, int capacity);
int rg_count_result_fallback_pin(const rg_count_result* r);

/* ---- lower bounds ------------------------------------------------------ */

/* construction: "caterpillar", "fan", "genfan", or "genfan3d".
 * base/glue graphs are optional where the formulas allow counts-only input;
 * *_count are decimal strings. Outputs may be NULL when not wanted. */
rg_status rg_bound(const char* construction, const rg_graph* base,
                   int base_vertices, const char* base_count,
                   const rg_graph* glue, int glue_vertices,
                   const char* glue_count, int n, char** value_out,
                   int* k_out, int* padding_out, int* exact_out,
                   double* rate_out);

/* Closed-form lower bound for n >= 3; dimension 2 or 3. */
rg_status rg_theorem_bound(int dimension, int n, char** value_out);

/* Growth rate rounded half-up to 5 decimals, e.g. "2.21336". */
rg_status rg_format_rate(double rate, char** out);

/* ---- graph families ---------------------------------------------------- */

/* family: 'T' or 'S'. reason_out (optional) receives the failure reason or
 * an empty string on membership. */
rg_status rg_family_check(const rg_graph* g, char family, int* verdict_out,
                          char** reason_out);

/* Streams every n-vertex member of the family, best realization count first
 * when with_counts is nonzero (count is NULL otherwise). The callback
 * returns nonzero to continue. */
rg_status rg_family_search(int n, char family, int with_counts,
                           const rg_count_config* cfg,
                           int (*callback)(void* user, const char* code,
                                           const char* count),
                           void* user);

/* ---- reproduction of embedded reference tables ------------------------- */

/* table: "1".."6" or "appendix". tier is "desk", "stretch", or "beyond";
 * checked/pass are 0/1. all_passed_out (optional) receives 1 when every
 * checked line passed and at least one line was checked. */
rg_status rg_reproduce(const char* table, int stretch,
                       const rg_count_config* cfg,
                       void (*callback)(void* user, const char* table,
                                        const char* name, const char* expected,
                                        const char* computed, const char* tier,
                                        int checked, int pass,
                                        const char* note),
                       void* user, int* all_passed_out);

/* Number of valid table identifiers and the identifier at an index. */
int rg_reproduce_table_count(void);
const char* rg_reproduce_table_name(int index);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RIGIDITY_H */
