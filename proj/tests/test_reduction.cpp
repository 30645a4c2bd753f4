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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "pmcut/error.hpp"
#include "pmcut/reduction.hpp"
#include "support.hpp"

using namespace pmcut;
using namespace pmcut::testing;

namespace {

// Pairs of bundles whose order differs between the two columns.
int inversions(const Drawing& d) {
  std::map<Bundle, int> pos;
  for (size_t k = 0; k < d.entry_order.size(); ++k) pos[d.entry_order[k]] = static_cast<int>(k);
  int inv = 0;
  for (size_t a = 0; a < d.exit_order.size(); ++a)
    for (size_t b = a + 1; b < d.exit_order.size(); ++b)
      inv += pos[d.exit_order[a]] > pos[d.exit_order[b]];
  return inv;
}

void check_barnette(const ReductionArtifact& a) {
  const Graph& g = a.graph;
  CHECK(g.vertex_count() == 36 * a.formula.n + 112 * a.formula.m() + 16 * a.q());
  CHECK(is_connected(g));
  CHECK(is_cubic(g));
  CHECK(is_bipartite(g));
  CHECK(is_planar_embedding(g, a.embedding));
  CHECK(is_3_connected(g));
}

}  // namespace

TEST_CASE("canonical instance is Barnette with the size law") {
  const ReductionArtifact a = reduce(canonical_n3());
  check_barnette(a);
  CHECK(a.q() == inversions(a.drawing));
  CHECK(static_cast<int>(a.origin.size()) == a.graph.vertex_count());
  CHECK(a.s2.size() == 3);
  for (const auto& s : a.s2) CHECK(s.size() == 6);
}

TEST_CASE("random instances are Barnette") {
  for (int n : {6, 9}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      CAPTURE(n);
      CAPTURE(seed);
      const ReductionArtifact a = reduce(random_e4_formula(n, seed));
      check_barnette(a);
      CHECK(a.q() == inversions(a.drawing));
    }
  }
}

TEST_CASE("layout orders and quadruples") {
  const NaeFormula f = random_e4_formula(9, 4);
  const HGraph h = build_h(f);
  const Drawing d = layout(h);
  REQUIRE(d.exit_order.size() == static_cast<size_t>(4 * f.n));
  CHECK(std::is_permutation(d.exit_order.begin(), d.exit_order.end(), d.entry_order.begin()));
  // Exit order: variables descending, clauses descending within each.
  CHECK(std::is_sorted(d.exit_order.begin(), d.exit_order.end(), std::greater<Bundle>()));
  // Entry order: clauses descending, variables ascending within each.
  for (size_t k = 1; k < d.entry_order.size(); ++k) {
    const Bundle& p = d.entry_order[k - 1];
    const Bundle& q = d.entry_order[k];
    CHECK((p.second > q.second || (p.second == q.second && p.first < q.first)));
  }
  // Replaying the swaps turns the exit order into the entry order.
  std::vector<Bundle> cur = d.exit_order;
  for (const auto& qd : d.quadruples) {
    REQUIRE(qd.track + 1 < static_cast<int>(cur.size()));
    CHECK(cur[qd.track] == qd.upper);
    CHECK(cur[qd.track + 1] == qd.lower);
    std::swap(cur[qd.track], cur[qd.track + 1]);
  }
  CHECK(cur == d.entry_order);
  CHECK(static_cast<int>(d.quadruples.size()) == inversions(d));
}

TEST_CASE("H graph joins every occurrence by two connectors") {
  const NaeFormula f = random_e4_formula(6, 2);
  const HGraph h = build_h(f);
  CHECK(h.connectors.size() == static_cast<size_t>(2 * 4 * f.n));
  CHECK(h.graph.vertex_count() == 36 * f.n + 112 * f.m());
  CHECK(is_cubic(h.graph));
}

TEST_CASE("connectors and crossings are recorded") {
  const ReductionArtifact a = reduce(random_e4_formula(6, 1));
  std::set<int> touched;
  for (const Connector& c : a.connectors) {
    REQUIRE(a.graph.find_edge(c.u, c.v) >= 0);
    CHECK(c.var >= 1);
    CHECK(c.var <= a.formula.n);
    touched.insert(c.u);
    touched.insert(c.v);
  }
  for (const CrossingRecord& r : a.crossings) {
    CHECK(r.base >= 0);
    CHECK(r.upper != r.lower);
    CHECK(r.upper.first != r.lower.first);
  }
  CHECK(a.wires.size() == static_cast<size_t>(2 * 4 * a.formula.n));
  int hops = 0;
  for (const WireRoute& w : a.wires) hops += static_cast<int>(w.hops.size());
  // Every crossing gadget carries four wire passes.
  CHECK(hops == 4 * a.q());
}

TEST_CASE("reduce is deterministic") {
  const NaeFormula f = random_e4_formula(9, 6);
  const ReductionArtifact a = reduce(f), b = reduce(f);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.embedding.rot == b.embedding.rot);
}

TEST_CASE("reduce rejects bad input") {
  auto kind = [](const NaeFormula& f) {
    try {
      reduce(f);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInternal;
  };
  CHECK(kind(NaeFormula{3, {{1, 2, 3}}}) == ErrorKind::kInvalid);
  CHECK(kind(cutvertex_n9()) == ErrorKind::kInvalid);
  NaeFormula two = canonical_n3();
  for (Clause c : canonical_n3().clauses) two.clauses.push_back({c[0] + 3, c[1] + 3, c[2] + 3});
  two.n = 6;
  CHECK(kind(two) == ErrorKind::kInvalid);
}

TEST_CASE("global edge ids map gadget edges") {
  const ReductionArtifact a = reduce(canonical_n3());
  const Gadget v1 = build_variable_gadget(1, {1, 2, 3, 4});
  for (int e = 0; e < v1.graph.edge_count(); ++e) {
    const int ge = global_edge(a, a.variable_base[0], v1, e);
    REQUIRE(ge >= 0);
    auto [x, y] = a.graph.edge(ge);
    auto [lx, ly] = v1.graph.edge(e);
    CHECK(std::min(x, y) == std::min(lx, ly) + a.variable_base[0]);
    CHECK(std::max(x, y) == std::max(lx, ly) + a.variable_base[0]);
  }
}

TEST_CASE("gadget adjacency multigraph is bridgeless") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const ReductionArtifact a = reduce(random_e4_formula(6, seed));
    std::map<std::pair<int, int>, int> id;
    auto node = [&](int v) {
      const VertexOrigin& o = a.origin[v];
      return id.try_emplace({static_cast<int>(o.kind), o.index}, static_cast<int>(id.size()))
          .first->second;
    };
    std::vector<std::pair<int, int>> links;
    for (auto [u, v] : a.graph.edges()) {
      const int x = node(u), y = node(v);
      if (x != y) links.push_back({x, y});
    }
    const int nodes = static_cast<int>(id.size());
    CHECK(nodes == a.formula.n + a.formula.m() + a.q());
    for (size_t skip = 0; skip < links.size(); ++skip) {
      std::vector<std::vector<int>> adj(nodes);
      for (size_t k = 0; k < links.size(); ++k) {
        if (k == skip) continue;
        adj[links[k].first].push_back(links[k].second);
        adj[links[k].second].push_back(links[k].first);
      }
      std::vector<int> seen(nodes, 0), stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (!seen[y]) seen[y] = 1, ++count, stack.push_back(y);
      }
      CHECK(count == nodes);
    }
  }
}

TEST_CASE("every wire meets its crossings port to port") {
  const ReductionArtifact a = reduce(random_e4_formula(9, 1));
  std::vector<int> passes(a.q(), 0);
  for (const WireRoute& w : a.wires) {
    for (const auto& hop : w.hops) {
      REQUIRE(hop.crossing >= 0);
      REQUIRE(hop.crossing < a.q());
      CHECK(hop.in_port != hop.out_port);
      ++passes[hop.crossing];
      const CrossingRecord& r = a.crossings[hop.crossing];
      CHECK((w.bundle == r.upper || w.bundle == r.lower));
    }
  }
  for (int k : passes) CHECK(k == 4);
}
