// Copyright 2026 The pmcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to pmcut. All objects are opaque handles owned by the caller
 * and released with the matching *_free function. Every call that can fail
 * returns a pmcut_status; on failure pmcut_last_error() describes the
 * problem (per thread, valid until the next failing call on that thread).
 * Strings returned through char** are released with pmcut_string_free. */
#ifndef PMCUT_PMCUT_H_
#define PMCUT_PMCUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PMCUT_API __declspec(dllexport)
#else
#define PMCUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PMCUT_OK = 0,
  PMCUT_ERR_SYNTAX = 1,       /* malformed input text */
  PMCUT_ERR_INVALID = 2,      /* well-formed but violates an invariant */
  PMCUT_ERR_GUARD = 3,        /* size guard exceeded */
  PMCUT_ERR_BUDGET = 4,       /* enumeration cap exceeded */
  PMCUT_ERR_PRECONDITION = 5, /* input outside the operation's domain */
  PMCUT_ERR_IO = 6,
  PMCUT_ERR_INTERNAL = 7,     /* a self-check failed */
  PMCUT_ERR_ARGUMENT = 8      /* null handle, bad index or bad enum */
} pmcut_status;

/* Outcome of a PMC search. */
typedef enum { PMCUT_FOUND = 0, PMCUT_NONE = 1, PMCUT_EXHAUSTED = 2 } pmcut_search;

typedef enum { PMCUT_RENDER_SVG = 0, PMCUT_RENDER_DOT = 1 } pmcut_render_format;

typedef struct pmcut_formula pmcut_formula;
typedef struct pmcut_graph pmcut_graph;
typedef struct pmcut_artifact pmcut_artifact;

PMCUT_API const char* pmcut_version(void);
PMCUT_API const char* pmcut_last_error(void);
PMCUT_API const char* pmcut_status_name(pmcut_status s);
PMCUT_API void pmcut_string_free(char* s);

/* ---- formulas ---- */

PMCUT_API pmcut_status pmcut_formula_parse(const char* text, pmcut_formula** out);
PMCUT_API pmcut_status pmcut_formula_read(const char* path, pmcut_formula** out);
/* Random E4 formula on n variables whose incidence graph is connected and
 * free of variable cutvertices. */
PMCUT_API pmcut_status pmcut_formula_random(int n, uint64_t seed, pmcut_formula** out);
PMCUT_API void pmcut_formula_free(pmcut_formula* f);
PMCUT_API int pmcut_formula_variables(const pmcut_formula* f);
PMCUT_API int pmcut_formula_clauses(const pmcut_formula* f);
/* The three 1-based variables of clause j (0-based). */
PMCUT_API pmcut_status pmcut_formula_clause(const pmcut_formula* f, int j, int vars[3]);
PMCUT_API pmcut_status pmcut_formula_serialize(const pmcut_formula* f, char** out);
/* Number of variable cutvertices and of parts after splitting. */
PMCUT_API pmcut_status pmcut_formula_split_info(const pmcut_formula* f, int* cutvertices,
                                                int* parts, int* splits);
/* assignment: n bytes, 0 = side A. */
PMCUT_API pmcut_status pmcut_nae_satisfies(const pmcut_formula* f, const uint8_t* assignment,
                                           int* result);
/* Brute force; fills assignment (n bytes, may be NULL) when satisfiable. */
PMCUT_API pmcut_status pmcut_nae_solve(const pmcut_formula* f, int* satisfiable,
                                       uint8_t* assignment);

/* ---- graphs ---- */

/* edges: 2*E vertex ids. The graph has no embedding. */
PMCUT_API pmcut_status pmcut_graph_create(int vertices, int edge_count, const int* edges,
                                          pmcut_graph** out);
PMCUT_API pmcut_status pmcut_graph_parse(const char* text, pmcut_graph** out);
PMCUT_API pmcut_status pmcut_graph_read(const char* path, pmcut_graph** out);
PMCUT_API void pmcut_graph_free(pmcut_graph* g);
PMCUT_API int pmcut_graph_vertices(const pmcut_graph* g);
PMCUT_API int pmcut_graph_edges(const pmcut_graph* g);
PMCUT_API int pmcut_graph_has_embedding(const pmcut_graph* g);
PMCUT_API pmcut_status pmcut_graph_edge(const pmcut_graph* g, int e, int* u, int* v);
PMCUT_API pmcut_status pmcut_graph_serialize(const pmcut_graph* g, char** out);

/* Each field is 1 or 0; planar is -1 when the graph has no embedding and
 * three_connected is -1 when the size guard was hit. */
typedef struct {
  int connected;
  int cubic;
  int bipartite;
  int planar;
  int three_connected;
} pmcut_graph_report;

PMCUT_API pmcut_status pmcut_graph_check(const pmcut_graph* g, int jobs,
                                         pmcut_graph_report* out);

/* ---- perfect matching cuts; edge sets are E bytes, 1 = in the set ---- */

/* budget: decisions allowed, 0 for the default. m and decisions may be NULL. */
PMCUT_API pmcut_status pmcut_find_pmc(const pmcut_graph* g, uint64_t budget,
                                      pmcut_search* result, uint8_t* m, uint64_t* decisions);
PMCUT_API pmcut_status pmcut_find_pmc_bruteforce(const pmcut_graph* g, pmcut_search* result,
                                                 uint8_t* m);
/* is_cut uses parity BFS; on_faces repeats the check over the face walks
 * (-1 without an embedding). */
PMCUT_API pmcut_status pmcut_check_edge_set(const pmcut_graph* g, const uint8_t* m,
                                            int* is_perfect_matching, int* is_cut,
                                            int* on_faces);
/* sides: V bytes, 0 = side A. *ok is 0 when m is not a cutset. */
PMCUT_API pmcut_status pmcut_cut_from_edge_set(const pmcut_graph* g, const uint8_t* m,
                                               int* ok, uint8_t* sides);
PMCUT_API pmcut_status pmcut_matching_serialize(const pmcut_graph* g, const uint8_t* m,
                                                char** out);
PMCUT_API pmcut_status pmcut_matching_parse(const pmcut_graph* g, const char* text,
                                            uint8_t* m);
PMCUT_API pmcut_status pmcut_cut_serialize(int vertices, const uint8_t* sides, char** out);
/* Number of oracle violations and a one-line-per-finding report. */
PMCUT_API pmcut_status pmcut_lemma_oracles(const pmcut_graph* g, const uint8_t* m,
                                           int* violations, char** report);

/* ---- reduction ---- */

PMCUT_API pmcut_status pmcut_reduce(const pmcut_formula* f, pmcut_artifact** out);
PMCUT_API void pmcut_artifact_free(pmcut_artifact* a);
/* A new graph handle with the certified embedding. */
PMCUT_API pmcut_status pmcut_artifact_graph(const pmcut_artifact* a, pmcut_graph** out);
PMCUT_API int pmcut_artifact_crossings(const pmcut_artifact* a);
PMCUT_API pmcut_status pmcut_artifact_provenance(const pmcut_artifact* a, char** out);
PMCUT_API pmcut_status pmcut_assignment_from_pmc(const pmcut_artifact* a, const uint8_t* m,
                                                 uint8_t* assignment);
PMCUT_API pmcut_status pmcut_pmc_from_assignment(const pmcut_artifact* a,
                                                 const uint8_t* assignment, uint8_t* m);
PMCUT_API pmcut_status pmcut_render(const pmcut_artifact* a, pmcut_render_format format,
                                    char** out);

/* ---- gadgets ---- */

typedef struct {
  char kind[16]; /* "variable", "clause", "crossing" */
  int vertices;
  int ports;
  int census;
  int expected;
  int audit_ok;
  int membership_ok;
} pmcut_gadget_report;

/* Fills three reports; details (may be NULL) receives failure notes. */
PMCUT_API pmcut_status pmcut_verify_gadgets(pmcut_gadget_report out[3], char** details);

#ifdef __cplusplus
}
#endif

#endif /* PMCUT_PMCUT_H_ */
