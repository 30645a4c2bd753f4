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

#include "pmcut/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "pmcut/error.hpp"

namespace pmcut {

std::vector<int> occurrences(const NaeFormula& f, int i) {
  std::vector<int> out;
  for (int j = 0; j < f.m(); ++j)
    for (int x : f.clauses[j])
      if (x == i) out.push_back(j + 1);
  return out;
}

namespace {

std::string anchor(const char* tag, int i, int j) {
  return std::string(tag) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::array<int, 3> sorted_clause(const Clause& c) {
  std::array<int, 3> s{c[0], c[1], c[2]};
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

HGraph build_h(const NaeFormula& f) {
  validate_formula(f, true);
  HGraph h;
  h.formula = f;
  int next = 0;
  for (int i = 1; i <= f.n; ++i) {
    std::vector<int> occ = occurrences(f, i);
    h.variables.push_back(build_variable_gadget(i, {occ[0], occ[1], occ[2], occ[3]}));
    h.variable_base.push_back(next);
    next += h.variables.back().graph.vertex_count();
  }
  for (int j = 1; j <= f.m(); ++j) {
    h.clauses.push_back(build_clause_gadget(j, sorted_clause(f.clauses[j - 1])));
    h.clause_base.push_back(next);
    next += h.clauses.back().graph.vertex_count();
  }
  std::vector<std::pair<int, int>> edges;
  auto add_gadget = [&](const Gadget& g, int base) {
    for (auto [u, v] : g.graph.edges()) edges.push_back({base + u, base + v});
  };
  for (int i = 0; i < f.n; ++i) add_gadget(h.variables[i], h.variable_base[i]);
  for (int j = 0; j < f.m(); ++j) add_gadget(h.clauses[j], h.clause_base[j]);
  for (int j = 1; j <= f.m(); ++j) {
    const Gadget& cg = h.clauses[j - 1];
    for (int i : sorted_clause(f.clauses[j - 1])) {
      const Gadget& vg = h.variables[i - 1];
      for (const char* t : {"t", "b"}) {
        const std::string primed = std::string(t) + "'";
        int u = h.variable_base[i - 1] + vg.port(anchor(t, i, j)).vertex;
        int v = h.clause_base[j - 1] + cg.port(anchor(primed.c_str(), i, j)).vertex;
        h.connectors.push_back({u, v, i});
        edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  h.graph = Graph(next, edges);
  for (int v = 0; v < next; ++v) {
    if (h.graph.degree(v) != 3)
      Fail(ErrorKind::kInternal, "H(I) is not cubic at vertex " + std::to_string(v));
  }
  return h;
}

Drawing layout(const HGraph& h) {
  const NaeFormula& f = h.formula;
  Drawing d;
  for (int i = f.n; i >= 1; --i) {
    std::vector<int> occ = occurrences(f, i);
    for (auto it = occ.rbegin(); it != occ.rend(); ++it) d.exit_order.push_back({i, *it});
  }
  for (int j = f.m(); j >= 1; --j)
    for (int i : sorted_clause(f.clauses[j - 1])) d.entry_order.push_back({i, j});
  std::map<Bundle, int> rank;
  for (size_t k = 0; k < d.entry_order.size(); ++k) rank[d.entry_order[k]] = static_cast<int>(k);
  std::vector<Bundle> cur = d.exit_order;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (size_t p = 0; p + 1 < cur.size(); ++p) {
      if (rank[cur[p]] > rank[cur[p + 1]]) {
        d.quadruples.push_back({cur[p], cur[p + 1], static_cast<int>(p)});
        std::swap(cur[p], cur[p + 1]);
        swapped = true;
      }
    }
  }
  return d;
}

namespace {

struct HalfEdges {
  int u, v;
  double angle_u, angle_v;
};

double angle_of(Point p) { return std::atan2(p.y, p.x); }

}  // namespace

ReductionArtifact planarize(const HGraph& h, const Drawing& d) {
  const NaeFormula& f = h.formula;
  ReductionArtifact a;
  a.formula = f;
  a.drawing = d;
  a.variable_base = h.variable_base;
  a.clause_base = h.clause_base;

  const Gadget crossing = build_crossing_gadget();
  int next = 0;
  for (const Gadget& g : h.variables) next += g.graph.vertex_count();
  for (const Gadget& g : h.clauses) next += g.graph.vertex_count();
  const int fixed_vertices = next;

  std::vector<HalfEdges> edges;
  a.origin.resize(fixed_vertices);
  auto add_gadget = [&](const Gadget& g, int base) {
    for (int v = 0; v < g.graph.vertex_count(); ++v)
      a.origin[base + v] = {g.kind, g.index, g.names[v]};
    for (int e = 0; e < g.graph.edge_count(); ++e) {
      auto [u, v] = g.graph.edge(e);
      edges.push_back({base + u, base + v, angle_of(g.direction(e, u)),
                       angle_of(g.direction(e, v))});
    }
  };
  for (int i = 0; i < f.n; ++i) {
    const Gadget& g = h.variables[i];
    add_gadget(g, h.variable_base[i]);
    for (const Port& p : g.ports) a.anchors[p.name] = h.variable_base[i] + p.vertex;
    std::vector<int> s2;
    for (int v : g.cycles.at("S2")) s2.push_back(h.variable_base[i] + v);
    a.s2.push_back(s2);
  }
  for (int j = 0; j < f.m(); ++j) {
    const Gadget& g = h.clauses[j];
    add_gadget(g, h.clause_base[j]);
    for (const Port& p : g.ports) a.anchors[p.name] = h.clause_base[j] + p.vertex;
  }

  // Open wire ends: vertex plus the outward angle of its port.
  struct End {
    int vertex;
    double angle;
  };
  std::map<std::pair<Bundle, bool>, End> ends;
  std::map<std::pair<Bundle, bool>, WireRoute> routes;
  for (const Bundle& bd : d.exit_order) {
    const Gadget& g = h.variables[bd.first - 1];
    for (bool top : {true, false}) {
      const Port& p = g.port(anchor(top ? "t" : "b", bd.first, bd.second));
      ends[{bd, top}] = {h.variable_base[bd.first - 1] + p.vertex, angle_of(p.outward)};
      routes[{bd, top}] = {bd, top, {}};
    }
  }
  auto connect = [&](End e, int v, double angle, int var) {
    edges.push_back({e.vertex, v, e.angle, angle});
    a.connectors.push_back({std::min(e.vertex, v), std::max(e.vertex, v), var});
  };

  for (size_t k = 0; k < d.quadruples.size(); ++k) {
    const Drawing::Quadruple& qd = d.quadruples[k];
    const int base = next;
    next += crossing.graph.vertex_count();
    a.origin.resize(next);
    add_gadget(crossing, base);
    for (int v = 0; v < crossing.graph.vertex_count(); ++v)
      a.origin[base + v].index = static_cast<int>(k) + 1;
    auto port = [&](const char* name) {
      const Port& p = crossing.port(name);
      return std::make_pair(base + p.vertex, angle_of(p.outward));
    };
    // Upper bundle runs u -> v, lower bundle runs v' -> u'.
    const std::tuple<Bundle, bool, const char*, const char*> hops[4] = {
        {qd.upper, true, "u2", "v2"},
        {qd.upper, false, "u1", "v1"},
        {qd.lower, true, "v1'", "u1'"},
        {qd.lower, false, "v2'", "u2'"},
    };
    for (auto& [bd, top, in, out] : hops) {
      auto [vin, ain] = port(in);
      connect(ends[{bd, top}], vin, ain, bd.first);
      auto [vout, aout] = port(out);
      ends[{bd, top}] = {vout, aout};
      routes[{bd, top}].hops.push_back({static_cast<int>(k), in, out});
    }
    a.crossings.push_back({qd.upper, qd.lower, base});
  }
  for (const Bundle& bd : d.entry_order) {
    const Gadget& g = h.clauses[bd.second - 1];
    for (bool top : {true, false}) {
      const Port& p = g.port(anchor(top ? "t'" : "b'", bd.first, bd.second));
      connect(ends[{bd, top}], h.clause_base[bd.second - 1] + p.vertex,
              angle_of(p.outward), bd.first);
      a.wires.push_back(routes[{bd, top}]);
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (const HalfEdges& e : edges) pairs.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(pairs.begin(), pairs.end());
  a.graph = Graph(next, pairs);
  std::sort(a.connectors.begin(), a.connectors.end(),
            [](const Connector& x, const Connector& y) {
              return std::tie(x.u, x.v) < std::tie(y.u, y.v);
            });

  std::vector<std::vector<std::pair<double, int>>> rot(next);
  for (const HalfEdges& e : edges) {
    int id = a.graph.find_edge(e.u, e.v);
    rot[e.u].push_back({e.angle_u, id});
    rot[e.v].push_back({e.angle_v, id});
  }
  a.embedding.rot.assign(next, {});
  for (int v = 0; v < next; ++v) {
    std::sort(rot[v].begin(), rot[v].end(), std::greater<>());
    for (auto& [ang, id] : rot[v]) a.embedding.rot[v].push_back(id);
  }
  if (!is_planar_embedding(a.graph, a.embedding))
    Fail(ErrorKind::kInternal, "assembled rotation system fails the Euler check");
  return a;
}

ReductionArtifact reduce(const NaeFormula& f) {
  validate_formula(f, true);
  if (f.n == 0) Fail(ErrorKind::kInvalid, "reduce: empty formula");
  IncidenceGraph inc = incidence_graph(f);
  {
    std::vector<int> seen(inc.adj.size(), 0), st{0};
    seen[0] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : inc.adj[v])
        if (!seen[w]) seen[w] = 1, st.push_back(w);
    }
    if (std::count(seen.begin(), seen.end(), 0) > 0)
      Fail(ErrorKind::kInvalid, "reduce: incidence graph is disconnected; split the formula first");
  }
  std::vector<int> cuts = variable_cutvertices(f);
  if (!cuts.empty()) {
    Fail(ErrorKind::kInvalid, "reduce: variable " + std::to_string(cuts.front()) +
                                  " is a cutvertex of the incidence graph; split the formula first");
  }
  HGraph h = build_h(f);
  return planarize(h, layout(h));
}

int global_edge(const ReductionArtifact& a, int base, const Gadget& g,
                int local_edge) {
  auto [u, v] = g.graph.edge(local_edge);
  int e = a.graph.find_edge(base + u, base + v);
  if (e < 0) Fail(ErrorKind::kInternal, "gadget edge missing from G(I)");
  return e;
}

}  // namespace pmcut
