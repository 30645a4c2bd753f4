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

#include "pmcut/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "pmcut/error.hpp"
#include "pmcut/search.hpp"

namespace pmcut {

const char* gadget_kind_name(GadgetKind k) {
  switch (k) {
    case GadgetKind::kVariable: return "variable";
    case GadgetKind::kClause: return "clause";
    case GadgetKind::kCrossing: return "crossing";
  }
  return "?";
}

int Gadget::vertex(const std::string& label) const {
  auto it = by_name.find(label);
  if (it == by_name.end())
    Fail(ErrorKind::kInvalid, "unknown gadget label '" + label + "'");
  return it->second;
}

int Gadget::edge(const std::string& a, const std::string& b) const {
  int e = graph.find_edge(vertex(a), vertex(b));
  if (e < 0) Fail(ErrorKind::kInvalid, "no edge " + a + "-" + b);
  return e;
}

const Port& Gadget::port(const std::string& name) const {
  for (const Port& p : ports)
    if (p.name == name) return p;
  Fail(ErrorKind::kInvalid, "unknown port '" + name + "'");
}

Point Gadget::direction(int e, int v) const {
  const auto& p = path[e];
  if (graph.edge(e).first == v) return {p[1].x - p[0].x, p[1].y - p[0].y};
  const size_t n = p.size();
  return {p[n - 2].x - p[n - 1].x, p[n - 2].y - p[n - 1].y};
}

namespace {

double angle(Point d) { return std::atan2(d.y, d.x); }

Point mirror(Point p) { return {24.0 - p.x, p.y}; }

// Collects a fragment by coordinates; vertices are numbered by first
// mention, edges sorted by endpoint ids.
class Builder {
 public:
  int v(Point p) {
    auto key = std::make_pair(std::lround(p.x * 2), std::lround(p.y * 2));
    auto it = at_.find(key);
    if (it != at_.end()) return it->second;
    int id = static_cast<int>(pos_.size());
    at_[key] = id;
    pos_.push_back(p);
    return id;
  }
  void edge(Point a, Point b, std::vector<Point> vias = {}, bool red = false) {
    raw_.push_back({v(a), v(b), std::move(vias), red});
  }
  void name(Point p, const std::string& label) { labels_.push_back({v(p), label}); }
  void port(Point p, const std::string& label, Point outward) {
    ports_.push_back({label, v(p), outward});
    name(p, label);
  }
  void cycle(const std::string& label, const std::vector<Point>& pts) {
    std::vector<int> ids;
    for (Point p : pts) ids.push_back(v(p));
    cycles_[label] = ids;
  }

  Gadget finish(GadgetKind kind, int index) {
    Gadget g;
    g.kind = kind;
    g.index = index;
    const int n = static_cast<int>(pos_.size());
    std::vector<std::tuple<int, int, std::vector<Point>, bool>> es;
    for (auto& r : raw_) {
      std::vector<Point> path{pos_[r.a]};
      path.insert(path.end(), r.vias.begin(), r.vias.end());
      path.push_back(pos_[r.b]);
      int a = r.a, b = r.b;
      if (a > b) {
        std::swap(a, b);
        std::reverse(path.begin(), path.end());
      }
      es.emplace_back(a, b, std::move(path), r.red);
    }
    std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<0>(x), std::get<1>(x)) <
             std::tie(std::get<0>(y), std::get<1>(y));
    });
    std::vector<std::pair<int, int>> edges;
    for (auto& e : es) edges.push_back({std::get<0>(e), std::get<1>(e)});
    g.graph = Graph(n, edges);
    g.red.assign(edges.size(), 0);
    for (size_t e = 0; e < es.size(); ++e) {
      g.path.push_back(std::get<2>(es[e]));
      g.red[e] = std::get<3>(es[e]);
    }
    g.pos = pos_;
    g.names.assign(n, "");
    for (auto& [id, label] : labels_) {
      if (g.names[id].empty()) g.names[id] = label;
      if (!g.by_name.emplace(label, id).second && g.by_name[label] != id)
        Fail(ErrorKind::kInternal, "duplicate gadget label " + label);
    }
    for (int id = 0; id < n; ++id) {
      if (g.names[id].empty())
        Fail(ErrorKind::kInternal, "unnamed gadget vertex " + std::to_string(id));
    }
    g.cycles = cycles_;
    g.embedding.rot.assign(n, {});
    for (int x = 0; x < n; ++x) {
      std::vector<std::pair<double, int>> r;
      for (const Incidence& i : g.graph.incident(x))
        r.push_back({angle(g.direction(i.edge, x)), i.edge});
      std::sort(r.begin(), r.end(), std::greater<>());
      for (auto& [a, e] : r) g.embedding.rot[x].push_back(e);
    }
    g.ports = ports_;
    // Reorder ports clockwise along the outer face.
    GadgetAudit audit = audit_gadget(g);
    if (!audit.ports_outer)
      Fail(ErrorKind::kInternal, "gadget ports are not on the outer face");
    std::vector<Port> ordered;
    for (const std::string& name : audit.port_order) ordered.push_back(g.port(name));
    g.ports = ordered;
    return g;
  }

 private:
  struct RawEdge {
    int a, b;
    std::vector<Point> vias;
    bool red;
  };
  std::map<std::pair<long, long>, int> at_;
  std::vector<Point> pos_;
  std::vector<RawEdge> raw_;
  std::vector<std::pair<int, std::string>> labels_;
  std::vector<Port> ports_;
  std::map<std::string, std::vector<int>> cycles_;
};

std::string pair_label(const char* tag, int a, int b) {
  return std::string(tag) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Gadget build_variable_gadget(int i, const std::array<int, 4>& clauses) {
  for (int k = 1; k < 4; ++k) {
    if (clauses[k - 1] >= clauses[k])
      Fail(ErrorKind::kPrecondition, "variable gadget clauses must ascend");
  }
  Builder b;
  const std::vector<Point> hex0 = {{0, 0}, {0.5, 0.5}, {1, 0.5},
                                   {1.5, 0}, {1, -0.5}, {0.5, -0.5}};
  const double shift[4] = {0, 3, 6, 11};
  const char* hex_names[4] = {"S1", "S2", "S3", "S5"};
  for (int h = 0; h < 4; ++h) {
    std::vector<Point> cyc;
    for (Point p : hex0) cyc.push_back({p.x + shift[h], p.y});
    for (int k = 0; k < 6; ++k) {
      b.edge(cyc[k], cyc[(k + 1) % 6]);
      b.name(cyc[k], std::string(hex_names[h]) + "." + std::to_string(k));
    }
    b.cycle(hex_names[h], cyc);
  }
  const std::vector<Point> s4 = {{9, 0}, {9.5, 0.5}, {10, 0}, {9.5, -0.5}};
  for (int k = 0; k < 4; ++k) {
    b.edge(s4[k], s4[(k + 1) % 4]);
    b.name(s4[k], "S4." + std::to_string(k));
  }
  b.cycle("S4", s4);

  // Anchor pairs, left to right: clauses j, k, p, q.
  const double ax[4] = {-1, 5, 8, 13};
  for (int k = 0; k < 4; ++k) {
    Point bp{ax[k], -2}, tp{ax[k] + 0.5, -2};
    b.edge(bp, tp);
    b.port(bp, pair_label("b", i, clauses[k]), {0, -1});
    b.port(tp, pair_label("t", i, clauses[k]), {0, -1});
  }

  struct R {
    Point a, z;
    std::vector<Point> via;
  };
  const std::vector<R> red = {
      {{0, 0}, {-0.5, -2}, {{-0.5, 0}}},
      {{0.5, 0.5}, {-1, -2}, {{-1, 0.5}}},
      {{0.5, -0.5}, {5, -2}, {{0.5, -1.5}, {5, -1.5}}},
      {{1, 0.5}, {3.5, 0.5}, {}},
      {{1.5, 0}, {3, 0}, {}},
      {{1, -0.5}, {3.5, -0.5}, {}},
      {{4, 0.5}, {6.5, 0.5}, {}},
      {{4, -0.5}, {6.5, -0.5}, {}},
      {{4.5, 0}, {6, 0}, {}},
      {{7, -0.5}, {5.5, -2}, {{7, -1.5}, {5.5, -1.5}}},
      {{7, 0.5}, {9, 0}, {{8, 0.5}, {8, 0}}},
      {{7.5, 0}, {8, -2}, {{7.5, -1.5}, {8, -1.5}}},
      {{11, 0}, {10, 0}, {}},
      {{11.5, 0.5}, {9.5, 0.5}, {}},
      {{11.5, -0.5}, {9.5, -0.5}, {}},
      {{12, -0.5}, {8.5, -2}, {{12, -1.5}, {8.5, -1.5}}},
      {{12, 0.5}, {13.5, -2}, {{13.5, 0.5}}},
      {{12.5, 0}, {13, -2}, {{13, 0}}},
  };
  for (const R& r : red) b.edge(r.a, r.z, r.via, true);
  return b.finish(GadgetKind::kVariable, i);
}

Gadget build_clause_gadget(int j, const std::array<int, 3>& vars) {
  if (!(vars[0] < vars[1] && vars[1] < vars[2]))
    Fail(ErrorKind::kPrecondition, "clause gadget variables must ascend");
  Builder b;
  const Point U[20] = {{0, 6}, {1, 6}, {2, 6}, {3, 6}, {5, 6}, {6, 6}, {7, 6},
                       {8, 6}, {8, 5}, {8, 4}, {8, 3}, {8, 2}, {8, 1}, {8, 0},
                       {6, 1.5}, {4, 3}, {5, 3}, {6, 3}, {5, 4.5}, {6, 4.5}};
  auto u = [&](int k) { return U[k - 1]; };
  // Left half; every call also adds the mirror image under x -> 24 - x.
  auto addm = [&](Point p, Point q, std::vector<Point> via = {},
                  bool red = false) {
    b.edge(p, q, via, red);
    std::vector<Point> mv;
    for (Point x : via) mv.push_back(mirror(x));
    b.edge(mirror(p), mirror(q), mv, red);
  };
  auto namem = [&](Point p, const std::string& label) {
    b.name(p, label);
    b.name(mirror(p), label + "'");
  };

  for (int k = 1; k < 14; ++k) addm(u(k), u(k + 1));
  addm(u(14), u(15));
  addm(u(15), u(16));
  addm(u(16), u(1));
  addm(u(16), u(17));
  addm(u(17), u(18));
  addm(u(18), u(11));
  addm(u(5), u(19));
  addm(u(19), u(17));
  addm(u(6), u(20));
  addm(u(20), u(18));
  addm(u(19), u(20));
  for (int k = 1; k <= 20; ++k) {
    b.name(u(k), "u" + std::to_string(k));
    b.name(mirror(u(k)), "v" + std::to_string(k));
  }

  // Horizontal edges joining the halves.
  for (int k : {9, 10, 12, 13}) b.edge(u(k), mirror(u(k)));
  for (double y : {13.5, 11.5, 9.5, 7.5, -2.0, -6.0}) b.edge({8.5, y}, {15.5, y});
  b.edge({11.5, -3.5}, {12.5, -3.5});
  b.edge({11.5, -4.5}, {12.5, -4.5});

  // Special squares F1..F6 stacked along x = 8.
  const double fy[6] = {13.5, 11.5, 9.5, 7.5, -2, -6};
  for (int f = 0; f < 6; ++f) {
    const double cy = fy[f];
    const std::vector<Point> c = {{8, cy - 0.5}, {8.5, cy}, {8, cy + 0.5}, {7.5, cy}};
    const char* side[4] = {"s", "e", "n", "w"};
    for (int k = 0; k < 4; ++k) {
      addm(c[k], c[(k + 1) % 4]);
      namem(c[k], "F" + std::to_string(f + 1) + "." + side[k]);
    }
    b.cycle("F" + std::to_string(f + 1), c);
    std::vector<Point> mc;
    for (Point p : c) mc.push_back(mirror(p));
    b.cycle("F" + std::to_string(f + 1) + "'", mc);
  }
  addm({8, 13}, {8, 12});
  addm({8, 11}, {8, 10});
  addm({8, 9}, {8, 8});
  addm({8, 7}, u(8));
  addm({8, -1.5}, u(14));
  addm({7.5, -2}, u(15), {{6, -2}});
  addm({7.5, 7.5}, u(7));
  addm({7.5, 9.5}, u(4));
  addm({7.5, 11.5}, u(3));
  addm({7.5, 13.5}, u(2));

  // The d path between F5 and F6, then D_j.
  const Point d1{8, -4.5}, d2{8, -4}, d3{8, -3.5};
  addm({8, -2.5}, d3);
  addm(d3, d2);
  addm(d2, d1);
  addm(d1, {8, -5.5});
  namem(d1, "d1");
  namem(d2, "d2");
  namem(d3, "d3");
  const Point da{9, -3.5}, db{9, -4}, dc{9, -4.5}, dd{9.5, -3.5}, de{9.5, -4.5},
      df{10, -4}, dg{11, -4}, dh{11.5, -3.5}, di{11.5, -4.5};
  addm(de, df);
  addm(df, dd);
  addm(dd, da);
  addm(da, db);
  addm(db, dc);
  addm(dc, de);
  addm(dg, di);
  addm(dg, dh);
  addm(d2, db, {}, true);
  addm(df, dg, {}, true);
  addm(de, di, {}, true);
  addm(dd, dh, {}, true);
  addm(dc, d1, {}, true);
  addm(da, d3, {}, true);
  const std::pair<Point, const char*> dnames[] = {
      {da, "D.a"}, {db, "D.b"}, {dc, "D.c"}, {dd, "D.d"}, {de, "D.e"},
      {df, "D.f"}, {dg, "D.g"}, {dh, "D.h"}, {di, "D.i"}};
  for (auto& [p, label] : dnames) namem(p, label);

  b.edge(mirror(u(1)), {16.5, -6}, {{24, -6}});

  // w labels sit on F4 and its mirror.
  b.name({8, 7}, "w1");
  b.name({8.5, 7.5}, "w2");
  b.name({15.5, 7.5}, "w3");
  b.name({16, 7}, "w4");
  b.name({7.5, 7.5}, "w5");
  b.name({16.5, 7.5}, "w6");

  const int a = vars[0], bv = vars[1], c = vars[2];
  b.port(u(1), pair_label("t'", bv, j), {0, -1});
  b.port({7.5, -6}, pair_label("b'", bv, j), {-1, 0});
  b.port({8, 14}, pair_label("b'", a, j), {0, 1});
  b.port({16, 14}, pair_label("t'", a, j), {0, 1});
  b.port({8, -6.5}, pair_label("t'", c, j), {0, -1});
  b.port({16, -6.5}, pair_label("b'", c, j), {0, -1});
  b.name(u(1), "t'b");
  b.name({7.5, -6}, "b'b");
  b.name({8, 14}, "b'a");
  b.name({16, 14}, "t'a");
  b.name({8, -6.5}, "t'c");
  b.name({16, -6.5}, "b'c");
  return b.finish(GadgetKind::kClause, j);
}

Gadget build_crossing_gadget() {
  Builder b;
  const std::pair<Point, const char*> squares[4] = {
      {{2, 2}, "Csw"}, {{4, 2}, "Cse"}, {{2, 4}, "Cnw"}, {{4, 4}, "Cne"}};
  for (auto& [c, label] : squares) {
    const std::vector<Point> k = {{c.x, c.y - 0.5}, {c.x + 0.5, c.y},
                                  {c.x, c.y + 0.5}, {c.x - 0.5, c.y}};
    const char* side[4] = {"s", "e", "n", "w"};
    for (int t = 0; t < 4; ++t) {
      b.edge(k[t], k[(t + 1) % 4]);
      b.name(k[t], std::string(label) + "." + side[t]);
    }
    b.cycle(label, k);
  }
  b.edge({2.5, 2}, {3.5, 2});
  b.edge({2, 2.5}, {2, 3.5});
  b.edge({2.5, 4}, {3.5, 4});
  b.edge({4, 2.5}, {4, 3.5});
  b.port({1.5, 2}, "u1", {-1, 0});
  b.port({1.5, 4}, "u2", {-1, 0});
  b.port({4.5, 2}, "v1", {1, 0});
  b.port({4.5, 4}, "v2", {1, 0});
  b.port({2, 4.5}, "u1'", {0, 1});
  b.port({4, 4.5}, "u2'", {0, 1});
  b.port({2, 1.5}, "v1'", {0, -1});
  b.port({4, 1.5}, "v2'", {0, -1});
  return b.finish(GadgetKind::kCrossing, 0);
}

const std::array<std::vector<std::pair<int, int>>, 3>& clause_type_pairs() {
  static const std::array<std::vector<std::pair<int, int>>, 3> pairs = {{
      {{1, 2}, {3, 4}, {5, 19}, {6, 20}, {7, 8},
       {9, 10}, {16, 17}, {18, 11}, {12, 13}, {15, 14}},
      {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {19, 20},
       {9, 10}, {16, 15}, {17, 18}, {11, 12}, {14, 13}},
      {{2, 3}, {4, 5}, {6, 7}, {8, 9}, {1, 16},
       {19, 17}, {20, 18}, {10, 11}, {12, 13}, {15, 14}},
  }};
  return pairs;
}

ClauseTypeSets clause_type_sets(const Gadget& clause) {
  if (clause.kind != GadgetKind::kClause)
    Fail(ErrorKind::kPrecondition, "clause_type_sets needs a clause gadget");
  ClauseTypeSets s;
  for (int t = 0; t < 3; ++t) {
    for (auto [k, l] : clause_type_pairs()[t]) {
      s.L[t].push_back(clause.edge("u" + std::to_string(k), "u" + std::to_string(l)));
      s.R[t].push_back(clause.edge("v" + std::to_string(k), "v" + std::to_string(l)));
    }
  }
  return s;
}

std::vector<int> clause_uv_vertices(const Gadget& clause) {
  std::vector<int> out;
  for (int k = 1; k <= 20; ++k) out.push_back(clause.vertex("u" + std::to_string(k)));
  for (int k = 1; k <= 20; ++k) out.push_back(clause.vertex("v" + std::to_string(k)));
  return out;
}

int clause_type_of(const Gadget& clause, const EdgeSet& restriction) {
  std::vector<std::uint8_t> in_uv(clause.graph.vertex_count(), 0);
  for (int v : clause_uv_vertices(clause)) in_uv[v] = 1;
  std::set<int> trace;
  for (int e = 0; e < clause.graph.edge_count(); ++e) {
    auto [x, y] = clause.graph.edge(e);
    if (restriction[e] && in_uv[x] && in_uv[y]) trace.insert(e);
  }
  ClauseTypeSets s = clause_type_sets(clause);
  for (int t = 0; t < 3; ++t) {
    std::set<int> want(s.L[t].begin(), s.L[t].end());
    want.insert(s.R[t].begin(), s.R[t].end());
    if (want == trace) return t + 1;
  }
  return 0;
}

CrossingTypeSets crossing_type_sets(const Gadget& x) {
  if (x.kind != GadgetKind::kCrossing)
    Fail(ErrorKind::kPrecondition, "crossing_type_sets needs a crossing gadget");
  CrossingTypeSets s;
  s.P1.assign(x.graph.edge_count(), 0);
  s.P2.assign(x.graph.edge_count(), 0);
  std::vector<std::uint8_t> is_port(x.graph.vertex_count(), 0);
  for (const Port& p : x.ports) is_port[p.vertex] = 1;
  for (const char* sq : {"Csw", "Cse", "Cnw", "Cne"}) {
    const auto& c = x.cycles.at(sq);
    for (int k = 0; k < 4; ++k) {
      int a = c[k], b = c[(k + 1) % 4];
      int e = x.graph.find_edge(a, b);
      if (is_port[a] != is_port[b])
        s.P1[e] = 1;
      else
        s.P2[e] = 1;
    }
  }
  return s;
}

std::vector<EdgeSet> enumerate_local_pmcs(const Gadget& g, int max_vertices,
                                          std::uint64_t node_cap) {
  if (g.graph.vertex_count() > max_vertices) {
    Fail(ErrorKind::kGuard, "census: gadget has " +
                                std::to_string(g.graph.vertex_count()) +
                                " vertices, guard is " +
                                std::to_string(max_vertices));
  }
  std::vector<EdgeSet> out;
  PmcSearch search(g.graph);
  SearchOutcome o = search.enumerate(node_cap, [&](const EdgeSet& m) {
    out.push_back(m);
    return true;
  });
  if (o == SearchOutcome::kBudget)
    Fail(ErrorKind::kBudget, "census exceeded its node cap");
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
    return edge_list(a) < edge_list(b);
  });
  return out;
}

Cut local_sides(const Gadget& g, const EdgeSet& restriction) {
  if (!is_perfect_matching(g.graph, restriction))
    Fail(ErrorKind::kPrecondition, "restriction is not a perfect matching");
  auto cut = cut_from_edge_set(g.graph, restriction);
  if (!cut) Fail(ErrorKind::kPrecondition, "restriction is not parity-consistent");
  return *cut;
}

bool SideTable::same_side(const std::string& a, const std::string& b) const {
  auto ia = std::find(ports.begin(), ports.end(), a);
  auto ib = std::find(ports.begin(), ports.end(), b);
  if (ia == ports.end() || ib == ports.end())
    Fail(ErrorKind::kInvalid, "unknown port in side table");
  return same[ia - ports.begin()][ib - ports.begin()];
}

SideTable side_relations(const Gadget& g, const EdgeSet& restriction) {
  Cut cut = local_sides(g, restriction);
  SideTable t;
  for (const Port& p : g.ports) t.ports.push_back(p.name);
  const size_t n = g.ports.size();
  t.same.assign(n, std::vector<std::uint8_t>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      t.same[a][b] = cut[g.ports[a].vertex] == cut[g.ports[b].vertex];
  return t;
}

GadgetAudit audit_gadget(const Gadget& g) {
  GadgetAudit r;
  const Graph& G = g.graph;
  const int n = G.vertex_count();
  std::vector<std::uint8_t> is_port(n, 0);
  for (const Port& p : g.ports) is_port[p.vertex] = 1;
  r.degrees = true;
  for (int v = 0; v < n; ++v)
    if (G.degree(v) != (is_port[v] ? 2 : 3)) r.degrees = false;
  r.bipartite = is_bipartite(G).has_value();
  try {
    r.embedding = is_connected(G) && is_planar_embedding(G, g.embedding);
  } catch (const Error&) {
    r.embedding = false;
  }
  if (!r.embedding) return r;

  // Augment with one stub leaf per port pointing along the connector.
  const int P = static_cast<int>(g.ports.size());
  std::vector<std::pair<int, int>> edges = G.edges();
  std::vector<std::vector<Point>> paths = g.path;
  for (int k = 0; k < P; ++k) {
    const Port& p = g.ports[k];
    Point s = g.pos[p.vertex];
    edges.push_back({p.vertex, n + k});
    paths.push_back({s, {s.x + 0.25 * p.outward.x, s.y + 0.25 * p.outward.y}});
  }
  Graph aug(n + P, edges);
  PlaneEmbedding emb;
  emb.rot.assign(n + P, {});
  for (int v = 0; v < n + P; ++v) {
    std::vector<std::pair<double, int>> rr;
    for (const Incidence& i : aug.incident(v)) {
      const auto& pth = paths[i.edge];
      Point d = aug.edge(i.edge).first == v
                    ? Point{pth[1].x - pth[0].x, pth[1].y - pth[0].y}
                    : Point{pth[pth.size() - 2].x - pth.back().x,
                            pth[pth.size() - 2].y - pth.back().y};
      rr.push_back({angle(d), i.edge});
    }
    std::sort(rr.begin(), rr.end(), std::greater<>());
    for (auto& [a, e] : rr) emb.rot[v].push_back(e);
  }
  std::vector<Face> faces = faces_from_embedding(aug, emb);
  int outer = -1;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    double area = 0;
    const Face& F = faces[f];
    for (size_t k = 0; k < F.edges.size(); ++k) {
      std::vector<Point> pth = paths[F.edges[k]];
      if (aug.edge(F.edges[k]).first != F.vertices[k])
        std::reverse(pth.begin(), pth.end());
      for (size_t t = 0; t + 1 < pth.size(); ++t)
        area += pth[t].x * pth[t + 1].y - pth[t + 1].x * pth[t].y;
    }
    if (area < 0) {
      if (outer != -1) return r;  // two clockwise faces: not a plane drawing
      outer = f;
    }
  }
  if (outer == -1) return r;
  const Face& F = faces[outer];
  std::vector<size_t> stub_pos;  // walk positions of port -> leaf darts
  for (size_t k = 0; k < F.edges.size(); ++k)
    if (F.edges[k] >= G.edge_count() && F.vertices[k] < n) stub_pos.push_back(k);
  if (static_cast<int>(stub_pos.size()) != P) return r;
  r.ports_outer = true;
  for (size_t k : stub_pos)
    r.port_order.push_back(g.ports[F.edges[k] - G.edge_count()].name);
  r.exposed_even = true;
  const size_t L = F.edges.size();
  for (size_t s = 0; s < stub_pos.size(); ++s) {
    size_t from = stub_pos[s] + 2;  // the port again, after the leaf
    size_t to = stub_pos[(s + 1) % stub_pos.size()];
    int count = static_cast<int>(((to + L - from) % L) + 1);
    r.exposed_sizes.push_back(count);
    if (count % 2) r.exposed_even = false;
  }
  return r;
}

}  // namespace pmcut

namespace pmcut {

std::vector<CensusReport> verify_gadget_censuses() {
  std::vector<CensusReport> out;
  const Gadget gadgets[3] = {build_variable_gadget(1, {1, 2, 3, 4}),
                             build_clause_gadget(1, {1, 2, 3}), build_crossing_gadget()};
  for (int k = 0; k < 3; ++k) {
    const Gadget& g = gadgets[k];
    CensusReport r;
    r.kind = g.kind;
    r.vertices = g.graph.vertex_count();
    r.ports = static_cast<int>(g.ports.size());
    r.expected = kExpectedCensus[k];
    r.audit_ok = audit_gadget(g).ok();
    if (!r.audit_ok) r.notes.push_back("structural audit failed");
    const std::vector<EdgeSet> census = enumerate_local_pmcs(g);
    r.census = static_cast<int>(census.size());
    auto contains = [&](const EdgeSet& m) {
      return std::find(census.begin(), census.end(), m) != census.end();
    };
    switch (g.kind) {
      case GadgetKind::kVariable:
        r.membership_ok = census.size() == 1 && census[0] == g.red;
        if (!r.membership_ok) r.notes.push_back("census differs from the red set");
        break;
      case GadgetKind::kClause: {
        std::vector<int> types;
        for (const EdgeSet& m : census) types.push_back(clause_type_of(g, m));
        std::sort(types.begin(), types.end());
        r.membership_ok = types == std::vector<int>{1, 2, 3};
        if (!r.membership_ok) {
          std::string t;
          for (int x : types) t += " " + std::to_string(x);
          r.notes.push_back("U/V traces show types" + t + ", expected 1 2 3");
        }
        break;
      }
      case GadgetKind::kCrossing: {
        const CrossingTypeSets p = crossing_type_sets(g);
        const bool p1 = contains(p.P1), p2 = contains(p.P2);
        r.membership_ok = p1 && p2;
        if (!p1) r.notes.push_back("P1 missing from census");
        if (!p2) r.notes.push_back("P2 missing from census");
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pmcut
