/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the co-bipartite chain maximum-cut library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function (NULL is accepted). Every fallible call returns a
 * cochain_status; on failure cochain_last_error() describes the problem for
 * the calling thread until its next failing call.
 */
#ifndef COCHAIN_H
#define COCHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COCHAIN_BUILDING_LIBRARY)
#    define COCHAIN_API __declspec(dllexport)
#  else
#    define COCHAIN_API __declspec(dllimport)
#  endif
#else
#  define COCHAIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cochain_status {
  COCHAIN_OK = 0,
  COCHAIN_ERR_INVALID_ARGUMENT = 1,
  COCHAIN_ERR_INVALID_GRAPH = 2,
  COCHAIN_ERR_INVALID_FORM = 3,
  COCHAIN_ERR_INVALID_CUT = 4,
  COCHAIN_ERR_OUT_OF_RANGE = 5,
  COCHAIN_ERR_PARSE = 6,
  COCHAIN_ERR_IO = 7,
  /* the graph is not a co-bipartite chain graph; see cochain_reject_stage */
  COCHAIN_ERR_REJECTED = 8,
  COCHAIN_ERR_BUDGET = 9,
  COCHAIN_ERR_INTERNAL = 10
} cochain_status;

typedef enum cochain_reject_stage {
  COCHAIN_ACCEPTED = 0,
  COCHAIN_REJECT_COMPLEMENT_NOT_BIPARTITE = 1,
  COCHAIN_REJECT_CHAIN_VIOLATED = 2
} cochain_reject_stage;

typedef enum cochain_side { COCHAIN_SIDE_K = 0, COCHAIN_SIDE_K_PRIME = 1 } cochain_side;

typedef struct cochain_graph cochain_graph;
typedef struct cochain_form cochain_form;
typedef struct cochain_solution cochain_solution;
typedef struct cochain_generator cochain_generator;

COCHAIN_API const char* cochain_version(void);
COCHAIN_API const char* cochain_last_error(void);
COCHAIN_API const char* cochain_status_string(cochain_status status);
COCHAIN_API const char* cochain_reject_stage_string(cochain_reject_stage stage);

/* ---- graphs -------------------------------------------------------------- */

/* `edges` holds edge_count (u, v) pairs, i.e. 2 * edge_count integers. */
COCHAIN_API cochain_status cochain_graph_create(uint32_t n, const uint32_t* edges,
                                                size_t edge_count, cochain_graph** out);
COCHAIN_API cochain_status cochain_graph_read_edgelist(const char* path, cochain_graph** out);
COCHAIN_API cochain_status cochain_graph_write_edgelist(const cochain_graph* graph,
                                                        const char* path);
COCHAIN_API void cochain_graph_free(cochain_graph* graph);
COCHAIN_API uint32_t cochain_graph_vertex_count(const cochain_graph* graph);
COCHAIN_API uint64_t cochain_graph_edge_count(const cochain_graph* graph);
/* Copies edges (u < v, sorted) into `pairs`, which must hold 2 * edge_count. */
COCHAIN_API cochain_status cochain_graph_edges(const cochain_graph* graph, uint32_t* pairs,
                                               size_t capacity_pairs);
/* in_s[v] != 0 places v in S. */
COCHAIN_API cochain_status cochain_graph_cut_size(const cochain_graph* graph,
                                                  const uint8_t* in_s, int64_t* out);

/* ---- recognition --------------------------------------------------------- */

COCHAIN_API cochain_status cochain_recognize(const cochain_graph* graph,
                                             cochain_reject_stage* stage);
/*
 * Returns COCHAIN_ERR_REJECTED (with *stage set) for graphs outside the class.
 * `sides` and `rows`, when non-NULL, receive the skeleton coordinate of every
 * vertex and must hold vertex_count entries.
 */
COCHAIN_API cochain_status cochain_normalize(const cochain_graph* graph, cochain_form** out,
                                             cochain_reject_stage* stage, uint8_t* sides,
                                             uint64_t* rows);

/* ---- chain forms --------------------------------------------------------- */

/* m and m_prime hold k + 1 entries each. */
COCHAIN_API cochain_status cochain_form_create(uint64_t k, const int64_t* m,
                                               const int64_t* m_prime, cochain_form** out);
COCHAIN_API cochain_status cochain_form_read(const char* path, cochain_form** out);
COCHAIN_API cochain_status cochain_form_write(const cochain_form* form, const char* path);

typedef enum cochain_file_format {
  COCHAIN_FORMAT_EDGELIST = 0,
  COCHAIN_FORMAT_CHAINFORM = 1
} cochain_file_format;

/* A second non-comment line starting with "m:" means a chain form. */
COCHAIN_API cochain_status cochain_sniff_format(const char* path, cochain_file_format* out);
COCHAIN_API void cochain_form_free(cochain_form* form);
COCHAIN_API uint64_t cochain_form_k(const cochain_form* form);
COCHAIN_API int cochain_form_is_minus(const cochain_form* form);
COCHAIN_API int64_t cochain_form_vertex_count(const cochain_form* form);
COCHAIN_API int64_t cochain_form_edge_count(const cochain_form* form);
/* Copies the multiplicities; each buffer must hold k + 1 entries. */
COCHAIN_API cochain_status cochain_form_multiplicities(const cochain_form* form, int64_t* m,
                                                       int64_t* m_prime, size_t capacity);
COCHAIN_API cochain_status cochain_form_expand(const cochain_form* form, cochain_graph** out);
COCHAIN_API cochain_status cochain_form_shuffle_expand(const cochain_form* form, uint64_t seed,
                                                       cochain_graph** out);
COCHAIN_API cochain_status cochain_form_canonical(const cochain_form* form, cochain_form** out);
/* s and s_prime hold k + 1 entries each. */
COCHAIN_API cochain_status cochain_cut_size(const cochain_form* form, const int64_t* s,
                                            const int64_t* s_prime, int64_t* out);

COCHAIN_API cochain_status cochain_form_counterexample(cochain_form** out);
COCHAIN_API cochain_status cochain_form_build_cc(uint64_t k, int minus, cochain_form** out);
COCHAIN_API cochain_status cochain_form_scaling_instance(int64_t n_vertices, uint64_t seed,
                                                         cochain_form** out);

/* ---- generator ----------------------------------------------------------- */

typedef struct cochain_gen_spec {
  uint64_t k_min;
  uint64_t k_max;
  int64_t multiplicity_min;
  int64_t multiplicity_max;
  uint64_t seed;
  uint32_t full_weight;
  uint32_t minus_weight;
} cochain_gen_spec;

COCHAIN_API cochain_status cochain_generator_create(const cochain_gen_spec* spec,
                                                    cochain_generator** out);
COCHAIN_API cochain_status cochain_generator_next(cochain_generator* gen, cochain_form** out);
COCHAIN_API void cochain_generator_free(cochain_generator* gen);

/* ---- exact solver -------------------------------------------------------- */

/* reconstruct == 0 runs the two-layer variant and yields no certificate. */
COCHAIN_API cochain_status cochain_solve(const cochain_form* form, int reconstruct,
                                         cochain_solution** out);
COCHAIN_API void cochain_solution_free(cochain_solution* solution);
COCHAIN_API int64_t cochain_solution_size(const cochain_solution* solution);
COCHAIN_API int cochain_solution_has_cut(const cochain_solution* solution);
/* Sum of s and of s' at the optimum. */
COCHAIN_API void cochain_solution_objective(const cochain_solution* solution, int64_t* x,
                                            int64_t* x_prime);
/* Buffers hold k + 1 entries each. */
COCHAIN_API cochain_status cochain_solution_cut(const cochain_solution* solution, int64_t* s,
                                                int64_t* s_prime, size_t capacity);

/* ---- oracles ------------------------------------------------------------- */

typedef struct cochain_oracle_result {
  int64_t size;
  uint64_t states_examined;
  /* on COCHAIN_ERR_BUDGET: the state count that would have been needed */
  uint64_t required_states;
} cochain_oracle_result;

/* in_s (optional) receives the witness subset, vertex_count entries. */
COCHAIN_API cochain_status cochain_oracle_subsets(const cochain_graph* graph, uint64_t limit,
                                                  cochain_oracle_result* out, uint8_t* in_s);
/* s, s_prime (optional) receive the witness cut function, k + 1 entries each. */
COCHAIN_API cochain_status cochain_oracle_multiplicity(const cochain_form* form, uint64_t limit,
                                                       cochain_oracle_result* out, int64_t* s,
                                                       int64_t* s_prime);

/* ---- twin-free closed form ----------------------------------------------- */

typedef struct cochain_pattern {
  int64_t x;
  int64_t y;
  int64_t z;
  int64_t t;
  int apex_in_s; /* minus variant only: side of v_k */
  int64_t value;
} cochain_pattern;

COCHAIN_API cochain_status cochain_closed_form(uint64_t k, int minus, cochain_pattern* out);
COCHAIN_API cochain_status cochain_pattern_search(uint64_t k, int minus, cochain_pattern* out);

/* ---- misc ---------------------------------------------------------------- */

COCHAIN_API cochain_status cochain_fit_exponent(const double* sizes, const double* seconds,
                                                size_t count, double* out);

#ifdef __cplusplus
}
#endif

#endif /* COCHAIN_H */
