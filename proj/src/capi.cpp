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

#include "pmcut/pmcut.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "pmcut/error.hpp"
#include "pmcut/formula.hpp"
#include "pmcut/gadgets.hpp"
#include "pmcut/graph.hpp"
#include "pmcut/io.hpp"
#include "pmcut/reduction.hpp"
#include "pmcut/render.hpp"
#include "pmcut/solver.hpp"

struct pmcut_formula {
  pmcut::NaeFormula f;
};

struct pmcut_graph {
  pmcut::Graph g;
  std::optional<pmcut::PlaneEmbedding> emb;
};

struct pmcut_artifact {
  pmcut::ReductionArtifact a;
};

namespace {

thread_local std::string last_error;

pmcut_status status_of(pmcut::ErrorKind k) {
  switch (k) {
    case pmcut::ErrorKind::kSyntax: return PMCUT_ERR_SYNTAX;
    case pmcut::ErrorKind::kInvalid: return PMCUT_ERR_INVALID;
    case pmcut::ErrorKind::kGuard: return PMCUT_ERR_GUARD;
    case pmcut::ErrorKind::kBudget: return PMCUT_ERR_BUDGET;
    case pmcut::ErrorKind::kPrecondition: return PMCUT_ERR_PRECONDITION;
    case pmcut::ErrorKind::kIo: return PMCUT_ERR_IO;
    case pmcut::ErrorKind::kInternal: return PMCUT_ERR_INTERNAL;
  }
  return PMCUT_ERR_INTERNAL;
}

pmcut_status fail(pmcut_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
pmcut_status guarded(F&& body) {
  try {
    body();
    return PMCUT_OK;
  } catch (const pmcut::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PMCUT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PMCUT_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define PMCUT_REQUIRE(cond)                                         \
  do {                                                              \
    if (!(cond)) return fail(PMCUT_ERR_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

pmcut::EdgeSet edge_set(const pmcut_graph* g, const std::uint8_t* m) {
  pmcut::EdgeSet s(g->g.edge_count());
  for (size_t e = 0; e < s.size(); ++e) s[e] = m[e] ? 1 : 0;
  return s;
}

pmcut_search search_of(pmcut::SearchOutcome o) {
  switch (o) {
    case pmcut::SearchOutcome::kFound: return PMCUT_FOUND;
    case pmcut::SearchOutcome::kNone: return PMCUT_NONE;
    case pmcut::SearchOutcome::kBudget: return PMCUT_EXHAUSTED;
  }
  return PMCUT_NONE;
}

}  // namespace

extern "C" {

const char* pmcut_version(void) { return "1.0.0"; }
const char* pmcut_last_error(void) { return last_error.c_str(); }

const char* pmcut_status_name(pmcut_status s) {
  switch (s) {
    case PMCUT_OK: return "ok";
    case PMCUT_ERR_SYNTAX: return "syntax";
    case PMCUT_ERR_INVALID: return "invalid";
    case PMCUT_ERR_GUARD: return "guard";
    case PMCUT_ERR_BUDGET: return "budget";
    case PMCUT_ERR_PRECONDITION: return "precondition";
    case PMCUT_ERR_IO: return "io";
    case PMCUT_ERR_INTERNAL: return "internal";
    case PMCUT_ERR_ARGUMENT: return "argument";
  }
  return "unknown";
}

void pmcut_string_free(char* s) { std::free(s); }

pmcut_status pmcut_formula_parse(const char* text, pmcut_formula** out) {
  PMCUT_REQUIRE(text && out);
  return guarded([&] { *out = new pmcut_formula{pmcut::parse_formula(text)}; });
}

pmcut_status pmcut_formula_read(const char* path, pmcut_formula** out) {
  PMCUT_REQUIRE(path && out);
  return guarded(
      [&] { *out = new pmcut_formula{pmcut::parse_formula(pmcut::read_file(path))}; });
}

pmcut_status pmcut_formula_random(int n, uint64_t seed, pmcut_formula** out) {
  PMCUT_REQUIRE(out);
  return guarded([&] { *out = new pmcut_formula{pmcut::random_e4_formula(n, seed)}; });
}

void pmcut_formula_free(pmcut_formula* f) { delete f; }
int pmcut_formula_variables(const pmcut_formula* f) { return f ? f->f.n : -1; }
int pmcut_formula_clauses(const pmcut_formula* f) { return f ? f->f.m() : -1; }

pmcut_status pmcut_formula_clause(const pmcut_formula* f, int j, int vars[3]) {
  PMCUT_REQUIRE(f && vars && j >= 0 && j < f->f.m());
  for (int k = 0; k < 3; ++k) vars[k] = f->f.clauses[j][k];
  return PMCUT_OK;
}

pmcut_status pmcut_formula_serialize(const pmcut_formula* f, char** out) {
  PMCUT_REQUIRE(f && out);
  return guarded([&] { *out = dup(pmcut::serialize_formula(f->f)); });
}

pmcut_status pmcut_formula_split_info(const pmcut_formula* f, int* cutvertices, int* parts,
                                      int* splits) {
  PMCUT_REQUIRE(f);
  return guarded([&] {
    if (cutvertices) *cutvertices = static_cast<int>(pmcut::variable_cutvertices(f->f).size());
    pmcut::SplitResult r = pmcut::split_variable_cutvertices_detailed(f->f);
    if (parts) *parts = static_cast<int>(r.parts.size());
    if (splits) *splits = r.splits;
  });
}

pmcut_status pmcut_nae_satisfies(const pmcut_formula* f, const uint8_t* assignment,
                                 int* result) {
  PMCUT_REQUIRE(f && assignment && result);
  return guarded([&] {
    pmcut::Assignment a(assignment, assignment + f->f.n);
    *result = pmcut::nae_satisfies(f->f, a);
  });
}

pmcut_status pmcut_nae_solve(const pmcut_formula* f, int* satisfiable, uint8_t* assignment) {
  PMCUT_REQUIRE(f && satisfiable);
  return guarded([&] {
    std::optional<pmcut::Assignment> a = pmcut::solve_nae_bruteforce(f->f);
    *satisfiable = a.has_value();
    if (a && assignment) std::copy(a->begin(), a->end(), assignment);
  });
}

pmcut_status pmcut_graph_create(int vertices, int edge_count, const int* edges,
                                pmcut_graph** out) {
  PMCUT_REQUIRE(out && vertices >= 0 && edge_count >= 0 && (edges || edge_count == 0));
  return guarded([&] {
    std::vector<std::pair<int, int>> list;
    for (int e = 0; e < edge_count; ++e) list.push_back({edges[2 * e], edges[2 * e + 1]});
    *out = new pmcut_graph{pmcut::Graph(vertices, std::move(list)), std::nullopt};
  });
}

pmcut_status pmcut_graph_parse(const char* text, pmcut_graph** out) {
  PMCUT_REQUIRE(text && out);
  return guarded([&] {
    pmcut::GraphFile gf = pmcut::parse_graph(text);
    *out = new pmcut_graph{std::move(gf.graph), std::move(gf.embedding)};
  });
}

pmcut_status pmcut_graph_read(const char* path, pmcut_graph** out) {
  PMCUT_REQUIRE(path && out);
  return guarded([&] {
    pmcut::GraphFile gf = pmcut::parse_graph(pmcut::read_file(path));
    *out = new pmcut_graph{std::move(gf.graph), std::move(gf.embedding)};
  });
}

void pmcut_graph_free(pmcut_graph* g) { delete g; }
int pmcut_graph_vertices(const pmcut_graph* g) { return g ? g->g.vertex_count() : -1; }
int pmcut_graph_edges(const pmcut_graph* g) { return g ? g->g.edge_count() : -1; }
int pmcut_graph_has_embedding(const pmcut_graph* g) { return g && g->emb ? 1 : 0; }

pmcut_status pmcut_graph_edge(const pmcut_graph* g, int e, int* u, int* v) {
  PMCUT_REQUIRE(g && u && v && e >= 0 && e < g->g.edge_count());
  *u = g->g.edge(e).first;
  *v = g->g.edge(e).second;
  return PMCUT_OK;
}

pmcut_status pmcut_graph_serialize(const pmcut_graph* g, char** out) {
  PMCUT_REQUIRE(g && out);
  return guarded([&] {
    *out = dup(pmcut::serialize_graph(g->g, g->emb ? &*g->emb : nullptr));
  });
}

pmcut_status pmcut_graph_check(const pmcut_graph* g, int jobs, pmcut_graph_report* out) {
  PMCUT_REQUIRE(g && out && jobs >= 1);
  return guarded([&] {
    out->connected = pmcut::is_connected(g->g);
    out->cubic = pmcut::is_cubic(g->g);
    out->bipartite = pmcut::is_bipartite(g->g).has_value();
    out->planar = -1;
    if (g->emb) out->planar = out->connected && pmcut::is_planar_embedding(g->g, *g->emb);
    try {
      out->three_connected = pmcut::is_3_connected(g->g, jobs);
    } catch (const pmcut::Error& e) {
      if (e.kind() != pmcut::ErrorKind::kGuard) throw;
      out->three_connected = -1;
    }
  });
}

pmcut_status pmcut_find_pmc(const pmcut_graph* g, uint64_t budget, pmcut_search* result,
                            uint8_t* m, uint64_t* decisions) {
  PMCUT_REQUIRE(g && result);
  return guarded([&] {
    pmcut::PmcResult r = pmcut::find_pmc(g->g, budget ? budget : pmcut::kDefaultBudget);
    *result = search_of(r.outcome);
    if (decisions) *decisions = r.stats.decisions;
    if (m && r.outcome == pmcut::SearchOutcome::kFound) std::copy(r.m.begin(), r.m.end(), m);
  });
}

pmcut_status pmcut_find_pmc_bruteforce(const pmcut_graph* g, pmcut_search* result,
                                       uint8_t* m) {
  PMCUT_REQUIRE(g && result);
  return guarded([&] {
    std::optional<pmcut::EdgeSet> r = pmcut::find_pmc_bruteforce(g->g);
    *result = r ? PMCUT_FOUND : PMCUT_NONE;
    if (r && m) std::copy(r->begin(), r->end(), m);
  });
}

pmcut_status pmcut_check_edge_set(const pmcut_graph* g, const uint8_t* m,
                                  int* is_perfect_matching, int* is_cut, int* on_faces) {
  PMCUT_REQUIRE(g && m);
  return guarded([&] {
    pmcut::EdgeSet s = edge_set(g, m);
    if (is_perfect_matching) *is_perfect_matching = pmcut::is_perfect_matching(g->g, s);
    if (is_cut) *is_cut = pmcut::cut_from_edge_set(g->g, s).has_value();
    if (on_faces)
      *on_faces = g->emb ? pmcut::is_cutset_via_cycle_basis(g->g, *g->emb, s) : -1;
  });
}

pmcut_status pmcut_cut_from_edge_set(const pmcut_graph* g, const uint8_t* m, int* ok,
                                     uint8_t* sides) {
  PMCUT_REQUIRE(g && m && ok);
  return guarded([&] {
    std::optional<pmcut::Cut> c = pmcut::cut_from_edge_set(g->g, edge_set(g, m));
    *ok = c.has_value();
    if (c && sides) std::copy(c->begin(), c->end(), sides);
  });
}

pmcut_status pmcut_matching_serialize(const pmcut_graph* g, const uint8_t* m, char** out) {
  PMCUT_REQUIRE(g && m && out);
  return guarded([&] { *out = dup(pmcut::serialize_matching(g->g, edge_set(g, m))); });
}

pmcut_status pmcut_matching_parse(const pmcut_graph* g, const char* text, uint8_t* m) {
  PMCUT_REQUIRE(g && text && m);
  return guarded([&] {
    pmcut::EdgeSet s = pmcut::parse_matching(g->g, text);
    std::copy(s.begin(), s.end(), m);
  });
}

pmcut_status pmcut_cut_serialize(int vertices, const uint8_t* sides, char** out) {
  PMCUT_REQUIRE(vertices >= 0 && (sides || vertices == 0) && out);
  return guarded([&] {
    pmcut::Cut c(sides, sides + vertices);
    *out = dup(pmcut::serialize_cut(c));
  });
}

pmcut_status pmcut_lemma_oracles(const pmcut_graph* g, const uint8_t* m, int* violations,
                                 char** report) {
  PMCUT_REQUIRE(g && m && violations);
  return guarded([&] {
    pmcut::OracleReport r = pmcut::lemma_oracles(g->g, edge_set(g, m));
    *violations = static_cast<int>(r.violations.size());
    if (report) {
      std::ostringstream s;
      s << "squares " << r.four_cycles << " adjacent-square-pairs " << r.adjacent_square_pairs
        << " hexagons " << r.six_cycles << " flanked-hexagons " << r.hex_square_cycles
        << " path-checks " << r.path_checks << '\n';
      for (const std::string& v : r.violations) s << "violation: " << v << '\n';
      *report = dup(s.str());
    }
  });
}

pmcut_status pmcut_reduce(const pmcut_formula* f, pmcut_artifact** out) {
  PMCUT_REQUIRE(f && out);
  return guarded([&] { *out = new pmcut_artifact{pmcut::reduce(f->f)}; });
}

void pmcut_artifact_free(pmcut_artifact* a) { delete a; }

pmcut_status pmcut_artifact_graph(const pmcut_artifact* a, pmcut_graph** out) {
  PMCUT_REQUIRE(a && out);
  return guarded([&] { *out = new pmcut_graph{a->a.graph, a->a.embedding}; });
}

int pmcut_artifact_crossings(const pmcut_artifact* a) { return a ? a->a.q() : -1; }

pmcut_status pmcut_artifact_provenance(const pmcut_artifact* a, char** out) {
  PMCUT_REQUIRE(a && out);
  return guarded([&] { *out = dup(pmcut::serialize_provenance(a->a)); });
}

pmcut_status pmcut_assignment_from_pmc(const pmcut_artifact* a, const uint8_t* m,
                                       uint8_t* assignment) {
  PMCUT_REQUIRE(a && m && assignment);
  return guarded([&] {
    pmcut::EdgeSet s(m, m + a->a.graph.edge_count());
    pmcut::Assignment x = pmcut::assignment_from_pmc(a->a, s);
    std::copy(x.begin(), x.end(), assignment);
  });
}

pmcut_status pmcut_pmc_from_assignment(const pmcut_artifact* a, const uint8_t* assignment,
                                       uint8_t* m) {
  PMCUT_REQUIRE(a && assignment && m);
  return guarded([&] {
    pmcut::Assignment x(assignment, assignment + a->a.formula.n);
    pmcut::EdgeSet s = pmcut::pmc_from_assignment(a->a, x);
    std::copy(s.begin(), s.end(), m);
  });
}

pmcut_status pmcut_render(const pmcut_artifact* a, pmcut_render_format format, char** out) {
  PMCUT_REQUIRE(a && out && (format == PMCUT_RENDER_SVG || format == PMCUT_RENDER_DOT));
  return guarded([&] {
    *out = dup(pmcut::render(a->a, format == PMCUT_RENDER_SVG ? pmcut::RenderFormat::kSvg
                                                              : pmcut::RenderFormat::kDot));
  });
}

pmcut_status pmcut_verify_gadgets(pmcut_gadget_report out[3], char** details) {
  PMCUT_REQUIRE(out);
  return guarded([&] {
    std::vector<pmcut::CensusReport> rs = pmcut::verify_gadget_censuses();
    std::ostringstream notes;
    for (int k = 0; k < 3; ++k) {
      const pmcut::CensusReport& r = rs[k];
      std::memset(&out[k], 0, sizeof out[k]);
      std::strncpy(out[k].kind, pmcut::gadget_kind_name(r.kind), sizeof out[k].kind - 1);
      out[k].vertices = r.vertices;
      out[k].ports = r.ports;
      out[k].census = r.census;
      out[k].expected = r.expected;
      out[k].audit_ok = r.audit_ok;
      out[k].membership_ok = r.membership_ok;
      for (const std::string& n : r.notes) notes << out[k].kind << ": " << n << '\n';
    }
    if (details) *details = dup(notes.str());
  });
}

}  // extern "C"
