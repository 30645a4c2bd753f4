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

// Exercises the shared library through its C header only.
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "pmcut/pmcut.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { pmcut_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

const char* kCanonical = "nae3sat-e4 3 4\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(pmcut_version()) == "1.0.0");
  CHECK(std::string(pmcut_status_name(PMCUT_OK)) == "ok");
  CHECK(std::string(pmcut_status_name(PMCUT_ERR_SYNTAX)) == "syntax");
  pmcut_string_free(nullptr);
}

TEST_CASE("formula handles") {
  pmcut_formula* f = nullptr;
  REQUIRE(pmcut_formula_parse(kCanonical, &f) == PMCUT_OK);
  CHECK(pmcut_formula_variables(f) == 3);
  CHECK(pmcut_formula_clauses(f) == 4);
  int vars[3];
  REQUIRE(pmcut_formula_clause(f, 2, vars) == PMCUT_OK);
  CHECK(vars[0] == 1);
  CHECK(vars[2] == 3);
  CHECK(pmcut_formula_clause(f, 4, vars) == PMCUT_ERR_ARGUMENT);
  Str text;
  REQUIRE(pmcut_formula_serialize(f, &text.p) == PMCUT_OK);
  CHECK(text.s() == kCanonical);

  int sat = -1;
  std::uint8_t x[3];
  REQUIRE(pmcut_nae_solve(f, &sat, x) == PMCUT_OK);
  CHECK(sat == 1);
  int ok = -1;
  REQUIRE(pmcut_nae_satisfies(f, x, &ok) == PMCUT_OK);
  CHECK(ok == 1);
  const std::uint8_t same[3] = {1, 1, 1};
  REQUIRE(pmcut_nae_satisfies(f, same, &ok) == PMCUT_OK);
  CHECK(ok == 0);

  int cuts = -1, parts = -1, splits = -1;
  REQUIRE(pmcut_formula_split_info(f, &cuts, &parts, &splits) == PMCUT_OK);
  CHECK(cuts == 0);
  CHECK(parts == 1);
  CHECK(splits == 0);
  pmcut_formula_free(f);

  const char* glued =
      "nae3sat-e4 9 12\n1 2 3\n1 4 5\n2 3 4\n2 3 5\n2 4 5\n3 4 5\n"
      "1 6 7\n1 8 9\n6 7 8\n6 7 9\n6 8 9\n7 8 9\n";
  REQUIRE(pmcut_formula_parse(glued, &f) == PMCUT_OK);
  REQUIRE(pmcut_formula_split_info(f, &cuts, &parts, &splits) == PMCUT_OK);
  CHECK(cuts == 1);
  CHECK(parts == 2);
  CHECK(splits == 1);
  pmcut_artifact* a = nullptr;
  CHECK(pmcut_reduce(f, &a) == PMCUT_ERR_INVALID);
  CHECK(a == nullptr);
  pmcut_formula_free(f);
}

TEST_CASE("errors map to status codes") {
  pmcut_formula* f = nullptr;
  CHECK(pmcut_formula_parse("nae3sat-e4 3 4\n1 2\n", &f) == PMCUT_ERR_SYNTAX);
  CHECK(f == nullptr);
  CHECK(std::string(pmcut_last_error()).find("line 2") != std::string::npos);
  CHECK(pmcut_formula_parse("nae3sat-e4 3 1\n1 2 3\n", &f) == PMCUT_ERR_INVALID);
  CHECK(pmcut_formula_read("/nonexistent/file.nae", &f) == PMCUT_ERR_IO);
  CHECK(pmcut_formula_parse(nullptr, &f) == PMCUT_ERR_ARGUMENT);
  CHECK(pmcut_formula_random(4, 0, &f) == PMCUT_ERR_PRECONDITION);
  CHECK(pmcut_formula_variables(nullptr) < 0);
  pmcut_formula_free(nullptr);
  pmcut_graph_free(nullptr);
  pmcut_artifact_free(nullptr);
}

TEST_CASE("graph handles and checks") {
  // The cube.
  std::vector<int> es;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) es.insert(es.end(), {v, v ^ bit});
  pmcut_graph* g = nullptr;
  REQUIRE(pmcut_graph_create(8, 12, es.data(), &g) == PMCUT_OK);
  CHECK(pmcut_graph_vertices(g) == 8);
  CHECK(pmcut_graph_edges(g) == 12);
  CHECK(pmcut_graph_has_embedding(g) == 0);
  pmcut_graph_report rep;
  REQUIRE(pmcut_graph_check(g, 1, &rep) == PMCUT_OK);
  CHECK(rep.connected == 1);
  CHECK(rep.cubic == 1);
  CHECK(rep.bipartite == 1);
  CHECK(rep.planar == -1);
  CHECK(rep.three_connected == 1);

  pmcut_search res;
  std::vector<std::uint8_t> m(12);
  std::uint64_t decisions = 0;
  REQUIRE(pmcut_find_pmc(g, 0, &res, m.data(), &decisions) == PMCUT_OK);
  CHECK(res == PMCUT_FOUND);
  int pm = -1, cut = -1, faces = 0;
  REQUIRE(pmcut_check_edge_set(g, m.data(), &pm, &cut, &faces) == PMCUT_OK);
  CHECK(pm == 1);
  CHECK(cut == 1);
  CHECK(faces == -1);
  int violations = -1;
  Str report;
  REQUIRE(pmcut_lemma_oracles(g, m.data(), &violations, &report.p) == PMCUT_OK);
  CHECK(violations == 0);

  Str mt;
  REQUIRE(pmcut_matching_serialize(g, m.data(), &mt.p) == PMCUT_OK);
  std::vector<std::uint8_t> back(12);
  REQUIRE(pmcut_matching_parse(g, mt.p, back.data()) == PMCUT_OK);
  CHECK(back == m);
  int ok = 0;
  std::uint8_t sides[8];
  REQUIRE(pmcut_cut_from_edge_set(g, m.data(), &ok, sides) == PMCUT_OK);
  CHECK(ok == 1);
  Str ct;
  REQUIRE(pmcut_cut_serialize(8, sides, &ct.p) == PMCUT_OK);
  CHECK(ct.s().rfind("cut 4\n", 0) == 0);

  REQUIRE(pmcut_find_pmc_bruteforce(g, &res, m.data()) == PMCUT_OK);
  CHECK(res == PMCUT_FOUND);
  int u = -1, v = -1;
  CHECK(pmcut_graph_edge(g, 12, &u, &v) == PMCUT_ERR_ARGUMENT);
  pmcut_graph_free(g);

  const int bad[] = {0, 0};
  CHECK(pmcut_graph_create(2, 1, bad, &g) == PMCUT_ERR_INVALID);
  const int k4[] = {0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3};
  REQUIRE(pmcut_graph_create(4, 6, k4, &g) == PMCUT_OK);
  REQUIRE(pmcut_find_pmc(g, 0, &res, nullptr, nullptr) == PMCUT_OK);
  CHECK(res == PMCUT_NONE);
  pmcut_graph_free(g);
}

TEST_CASE("reduction pipeline") {
  pmcut_formula* f = nullptr;
  REQUIRE(pmcut_formula_parse(kCanonical, &f) == PMCUT_OK);
  pmcut_artifact* a = nullptr;
  REQUIRE(pmcut_reduce(f, &a) == PMCUT_OK);
  const int q = pmcut_artifact_crossings(a);
  pmcut_graph* g = nullptr;
  REQUIRE(pmcut_artifact_graph(a, &g) == PMCUT_OK);
  const int V = pmcut_graph_vertices(g), E = pmcut_graph_edges(g);
  CHECK(V == 36 * 3 + 112 * 4 + 16 * q);
  CHECK(pmcut_graph_has_embedding(g) == 1);
  pmcut_graph_report rep;
  REQUIRE(pmcut_graph_check(g, 2, &rep) == PMCUT_OK);
  CHECK(rep.cubic + rep.bipartite + rep.planar + rep.three_connected == 4);

  std::vector<std::uint8_t> m(E);
  pmcut_search res;
  CHECK(pmcut_find_pmc(g, 1, &res, m.data(), nullptr) == PMCUT_OK);
  CHECK(res == PMCUT_EXHAUSTED);
  REQUIRE(pmcut_find_pmc(g, 0, &res, m.data(), nullptr) == PMCUT_OK);
  REQUIRE(res == PMCUT_FOUND);
  int pm = 0, cut = 0, faces = 0;
  REQUIRE(pmcut_check_edge_set(g, m.data(), &pm, &cut, &faces) == PMCUT_OK);
  CHECK(pm + cut + faces == 3);

  std::uint8_t x[3];
  REQUIRE(pmcut_assignment_from_pmc(a, m.data(), x) == PMCUT_OK);
  int ok = 0;
  REQUIRE(pmcut_nae_satisfies(f, x, &ok) == PMCUT_OK);
  CHECK(ok == 1);
  std::vector<std::uint8_t> mp(E);
  REQUIRE(pmcut_pmc_from_assignment(a, x, mp.data()) == PMCUT_OK);
  const std::uint8_t all_a[3] = {0, 0, 0};
  CHECK(pmcut_pmc_from_assignment(a, all_a, mp.data()) == PMCUT_ERR_PRECONDITION);

  Str svg, dot, prov, gt;
  REQUIRE(pmcut_render(a, PMCUT_RENDER_SVG, &svg.p) == PMCUT_OK);
  CHECK(svg.s().rfind("<svg", 0) == 0);
  REQUIRE(pmcut_render(a, PMCUT_RENDER_DOT, &dot.p) == PMCUT_OK);
  CHECK(dot.s().rfind("graph G {", 0) == 0);
  CHECK(pmcut_render(a, static_cast<pmcut_render_format>(7), &dot.p) == PMCUT_ERR_ARGUMENT);
  REQUIRE(pmcut_artifact_provenance(a, &prov.p) == PMCUT_OK);
  CHECK(prov.s().rfind("vertex 0 ", 0) == 0);
  REQUIRE(pmcut_graph_serialize(g, &gt.p) == PMCUT_OK);
  pmcut_graph* g2 = nullptr;
  REQUIRE(pmcut_graph_parse(gt.p, &g2) == PMCUT_OK);
  CHECK(pmcut_graph_has_embedding(g2) == 1);
  CHECK(pmcut_graph_edges(g2) == E);

  pmcut_graph_free(g2);
  pmcut_graph_free(g);
  pmcut_artifact_free(a);
  pmcut_formula_free(f);
}

TEST_CASE("random formulas and gadget reports") {
  pmcut_formula* f = nullptr;
  REQUIRE(pmcut_formula_random(6, 3, &f) == PMCUT_OK);
  CHECK(pmcut_formula_clauses(f) == 8);
  int cuts = -1, parts = 0, splits = 0;
  REQUIRE(pmcut_formula_split_info(f, &cuts, &parts, &splits) == PMCUT_OK);
  CHECK(cuts == 0);
  pmcut_formula_free(f);

  pmcut_gadget_report r[3];
  Str details;
  REQUIRE(pmcut_verify_gadgets(r, &details.p) == PMCUT_OK);
  CHECK(std::string(r[0].kind) == "variable");
  CHECK(r[0].vertices == 36);
  CHECK(r[1].vertices == 112);
  CHECK(r[2].vertices == 16);
  for (const auto& x : r) {
    CHECK(x.census == x.expected);
    CHECK(x.audit_ok == 1);
    CHECK(x.membership_ok == 1);
  }
}
