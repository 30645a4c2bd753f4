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

#pragma once

// Independent oracles and generators for the test suites. Nothing here
// shares code with the library beyond the Graph container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmcut/formula.hpp"
#include "pmcut/graph.hpp"

namespace pmcut::testing {

// ---- cubic catalog ----

// Cubic pseudograph (loops and parallel edges allowed) as an edge list; a
// loop (v, v) counts twice towards the degree of v.
struct Multi {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Canonical string of a pseudograph: colour refinement, then individualise
// the first non-trivial cell in every way, keeping the smallest adjacency
// string over all leaves.
class Canon {
 public:
  explicit Canon(const Multi& g) : n_(g.n), a_(g.n * g.n, 0), nb_(g.n) {
    for (auto [u, v] : g.edges) {
      ++a_[u * n_ + v];
      if (u != v) ++a_[v * n_ + u];
    }
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w)
        if (w != v && a_[v * n_ + w]) nb_[v].push_back(w);
  }

  std::string form() {
    best_.clear();
    search(refine(distance_profile()));
    return best_;
  }

 private:
  // Degrees are at most 3, so a signature fits in five ints.
  using Sig = std::array<int, 5>;

  // Initial colours from each vertex's BFS layer sizes, which split cells
  // of regular graphs that refinement alone leaves whole.
  std::vector<int> distance_profile() const {
    std::vector<std::vector<int>> prof(n_);
    std::vector<int> dist(n_);
    for (int s = 0; s < n_; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      std::vector<int> queue{s};
      dist[s] = 0;
      for (size_t h = 0; h < queue.size(); ++h)
        for (int w : nb_[queue[h]])
          if (dist[w] < 0) {
            dist[w] = dist[queue[h]] + 1;
            queue.push_back(w);
          }
      prof[s].assign(n_, 0);
      for (int d : dist)
        if (d >= 0) ++prof[s][d];
    }
    std::vector<std::vector<int>> keys = prof;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> c(n_);
    for (int v = 0; v < n_; ++v)
      c[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), prof[v]) - keys.begin());
    return c;
  }

  // Colours stay dense (0..cells-1) and every pass refines the last one.
  std::vector<int> refine(std::vector<int> c) const {
    int cells = 1 + *std::max_element(c.begin(), c.end());
    std::vector<Sig> sig(n_);
    std::vector<int> order(n_);
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        Sig& s = sig[v];
        s = {c[v], a_[v * n_ + v], -1, -1, -1};
        int k = 2;
        for (int w : nb_[v]) s[k++] = c[w] * 8 + a_[v * n_ + w];
        std::sort(s.begin() + 2, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
      std::vector<int> next(n_);
      int k = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++k;
        next[order[i]] = k;
      }
      c.swap(next);
      if (k + 1 == cells) return c;
      cells = k + 1;
    }
  }

  void search(const std::vector<int>& c) {
    std::vector<int> size(n_, 0);
    for (int x : c) ++size[x];
    int cell = -1;
    for (int k = 0; k < n_ && cell < 0; ++k)
      if (size[k] > 1) cell = k;
    if (cell < 0) {
      std::vector<int> inv(n_);
      for (int v = 0; v < n_; ++v) inv[c[v]] = v;
      std::string s;
      for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) s += static_cast<char>('0' + a_[inv[i] * n_ + inv[j]]);
      if (best_.empty() || s < best_) best_ = s;
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (c[v] != cell) continue;
      std::vector<int> d(n_);
      for (int u = 0; u < n_; ++u) d[u] = 2 * c[u] + (c[u] == cell && u != v ? 1 : 0);
      // Make the colours dense again before refining.
      std::vector<int> used(d);
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      for (int& x : d) x = static_cast<int>(std::lower_bound(used.begin(), used.end(), x) - used.begin());
      search(refine(d));
    }
  }

  int n_;
  std::vector<std::uint8_t> a_;
  std::vector<std::vector<int>> nb_;
  std::string best_;
};

// Subdivisions still needed before g can be simple: one per surplus
// parallel edge, two per loop.
inline int defects(const Multi& g) {
  std::map<std::pair<int, int>, int> mult;
  int d = 0;
  for (auto [u, v] : g.edges) {
    if (u == v)
      d += 2;
    else if (mult[{std::min(u, v), std::max(u, v)}]++ > 0)
      ++d;
  }
  return d;
}

// Edge e of g replaced by a path through the new vertex x.
inline void subdivide(std::vector<std::pair<int, int>>& edges, size_t e, int x) {
  auto [a, b] = edges[e];
  edges[e] = {a, x};
  edges.push_back({x, b});
}

// Subdivide edges i and j (i == j: the same edge twice) and join the two new
// vertices.
inline Multi insert_edge(const Multi& g, size_t i, size_t j) {
  Multi h{g.n + 2, g.edges};
  const int x = g.n, y = g.n + 1;
  subdivide(h.edges, i, x);
  // After subdividing i, its second half sits at the back.
  subdivide(h.edges, i == j ? h.edges.size() - 1 : j, y);
  h.edges.push_back({x, y});
  return h;
}

// Subdivide edge i by x and hang a new vertex with a loop from x.
inline Multi loop_pendant(const Multi& g, size_t i) {
  Multi h{g.n + 2, g.edges};
  subdivide(h.edges, i, g.n);
  h.edges.push_back({g.n, g.n + 1});
  h.edges.push_back({g.n + 1, g.n + 1});
  return h;
}

// Subdivide edge i of g and edge j of k, then join the two new vertices.
inline Multi bridge_join(const Multi& g, size_t i, const Multi& k, size_t j) {
  Multi h{g.n + k.n + 2, g.edges};
  const size_t offset = h.edges.size();
  for (auto [u, v] : k.edges) h.edges.push_back({u + g.n, v + g.n});
  const int x = g.n + k.n, y = x + 1;
  subdivide(h.edges, i, x);
  subdivide(h.edges, offset + j, y);
  h.edges.push_back({x, y});
  return h;
}

struct CubicCatalog {
  std::map<int, std::vector<Graph>> simple;  // connected simple, by order
};

// Every connected cubic pseudograph on n >= 4 vertices reduces to a smaller
// one by undoing an edge insertion on a non-bridge edge, a loop pendant or a
// bridge join, so closing the two 2-vertex seeds under these operations
// reaches all of them. Graphs that cannot become simple within the remaining
// steps are dropped.
inline CubicCatalog cubic_catalog(int max_n) {
  CubicCatalog out;
  std::map<int, std::vector<Multi>> level;
  level[2] = {{2, {{0, 1}, {0, 1}, {0, 1}}}, {2, {{0, 0}, {0, 1}, {1, 1}}}};
  for (int n = 4; n <= max_n; n += 2) {
    const int slack = max_n - n;
    std::set<std::string> seen;
    std::vector<Multi>& next = level[n];
    auto offer = [&](Multi h) {
      if (defects(h) > slack) return;
      if (seen.insert(Canon(h).form()).second) next.push_back(std::move(h));
    };
    for (const Multi& g : level[n - 2]) {
      for (size_t i = 0; i < g.edges.size(); ++i) {
        offer(loop_pendant(g, i));
        for (size_t j = i; j < g.edges.size(); ++j) offer(insert_edge(g, i, j));
      }
    }
    for (int n1 = 2; 2 * n1 <= n - 2; n1 += 2) {
      const int n2 = n - 2 - n1;
      for (const Multi& g : level[n1])
        for (const Multi& k : level[n2])
          for (size_t i = 0; i < g.edges.size(); ++i)
            for (size_t j = 0; j < k.edges.size(); ++j) offer(bridge_join(g, i, k, j));
    }
    for (const Multi& h : next) {
      if (defects(h) != 0) continue;
      std::vector<std::pair<int, int>> es;
      for (auto [u, v] : h.edges) es.push_back({std::min(u, v), std::max(u, v)});
      std::sort(es.begin(), es.end());
      out.simple[n].push_back(Graph(h.n, es));
    }
  }
  return out;
}

// ---- random graphs ----

// Connected simple cubic graph on n vertices (n even, n >= 4) by the
// configuration model with rejection.
inline Graph random_cubic_graph(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> pts;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) pts.push_back(v);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::set<std::pair<int, int>> es;
    bool ok = true;
    for (size_t k = 0; k < pts.size() && ok; k += 2) {
      int u = std::min(pts[k], pts[k + 1]), v = std::max(pts[k], pts[k + 1]);
      ok = u != v && es.insert({u, v}).second;
    }
    if (!ok) continue;
    Graph g(n, std::vector<std::pair<int, int>>(es.begin(), es.end()));
    if (is_connected(g)) return g;
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

struct PlaneGraph {
  Graph graph;
  PlaneEmbedding emb;
};

// Random connected plane graph grown from a triangle by pendant vertices,
// chords inside a face and edge subdivisions, each inserted at a face corner
// so the rotation stays planar.
inline PlaneGraph random_plane_graph(int target_n, std::mt19937_64& rng) {
  int n = 3;
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
  // Clockwise rotations for a triangle drawn counter-clockwise 0,1,2.
  std::vector<std::vector<int>> rot{{2, 0}, {0, 1}, {1, 2}};
  auto other = [&](int e, int v) { return edges[e].first == v ? edges[e].second : edges[e].first; };
  auto pos = [&](int v, int e) {
    return static_cast<int>(std::find(rot[v].begin(), rot[v].end(), e) - rot[v].begin());
  };
  // A face as its corners: (vertex, index in rot of the arriving edge).
  auto random_face = [&]() {
    std::uniform_int_distribution<int> pe(0, static_cast<int>(edges.size()) - 1);
    int e = pe(rng);
    int a = std::uniform_int_distribution<int>(0, 1)(rng) ? edges[e].first : edges[e].second;
    std::vector<std::pair<int, int>> corners;
    int b = other(e, a);
    const int e0 = e, a0 = a;
    do {
      int p = pos(b, e);
      corners.push_back({b, p});
      int next = rot[b][(p + 1) % rot[b].size()];
      a = b;
      e = next;
      b = other(e, a);
    } while (!(e == e0 && a == a0));
    return corners;
  };
  std::set<std::pair<int, int>> present{{0, 1}, {1, 2}, {0, 2}};
  int guard = 0;
  while (n < target_n && ++guard < 10000) {
    const int op = std::uniform_int_distribution<int>(0, 2)(rng);
    if (op == 0) {  // pendant vertex in a face corner
      auto f = random_face();
      auto [v, p] = f[std::uniform_int_distribution<size_t>(0, f.size() - 1)(rng)];
      const int e = static_cast<int>(edges.size());
      edges.push_back({v, n});
      present.insert({v, n});
      rot[v].insert(rot[v].begin() + p + 1, e);
      rot.push_back({e});
      ++n;
    } else if (op == 1) {  // chord between two corners of one face
      auto f = random_face();
      if (f.size() < 4) continue;
      size_t i = std::uniform_int_distribution<size_t>(0, f.size() - 1)(rng);
      size_t j = std::uniform_int_distribution<size_t>(0, f.size() - 1)(rng);
      auto [u, pu] = f[i];
      auto [v, pv] = f[j];
      if (u == v || present.count({std::min(u, v), std::max(u, v)})) continue;
      const int e = static_cast<int>(edges.size());
      edges.push_back({std::min(u, v), std::max(u, v)});
      present.insert(edges.back());
      rot[u].insert(rot[u].begin() + pu + 1, e);
      rot[v].insert(rot[v].begin() + pv + 1, e);
    } else {  // subdivide an edge
      const int e = std::uniform_int_distribution<int>(0, static_cast<int>(edges.size()) - 1)(rng);
      auto [a, b] = edges[e];
      const int f = static_cast<int>(edges.size());
      present.erase({a, b});
      edges[e] = {a, n};
      edges.push_back({b, n});
      present.insert({a, n});
      present.insert({b, n});
      rot[b][pos(b, e)] = f;
      rot.push_back({e, f});
      ++n;
    }
  }
  // Relabel edges into the sorted order the Graph class uses.
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto norm = [&](int e) { return std::make_pair(std::min(edges[e].first, edges[e].second), std::max(edges[e].first, edges[e].second)); };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return norm(x) < norm(y); });
  std::vector<int> rank(edges.size());
  std::vector<std::pair<int, int>> sorted;
  for (size_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = static_cast<int>(k);
    sorted.push_back(norm(order[k]));
  }
  PlaneGraph out{Graph(n, sorted), {}};
  out.emb.rot = rot;
  for (auto& r : out.emb.rot)
    for (int& e : r) e = rank[e];
  return out;
}

// ---- exact oracles ----

// Every simple cycle as an edge list (small graphs only).
inline std::vector<std::vector<int>> all_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path_edges;
  std::vector<std::uint8_t> on(g.vertex_count(), 0);
  std::function<void(int, int, int)> rec = [&](int s, int v, int first) {
    for (const Incidence& i : g.incident(v)) {
      const int w = i.neighbor;
      if (w == s && path_edges.size() >= 2 && i.edge != path_edges.back()) {
        // list each cycle once: first edge id smaller than the closing one
        if (first < i.edge) {
          auto c = path_edges;
          c.push_back(i.edge);
          out.push_back(c);
        }
        continue;
      }
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path_edges.push_back(i.edge);
      rec(s, w, path_edges.size() == 1 ? i.edge : first);
      path_edges.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    on[s] = 1;
    rec(s, s, -1);
    on[s] = 0;
  }
  return out;
}

// Maximum number of internally vertex-disjoint s-t paths, capped at cap,
// by unit-capacity augmenting paths on the split-vertex network.
inline int local_connectivity(const Graph& g, int s, int t, int cap) {
  const int n = g.vertex_count();
  // node 2v = v_in, 2v+1 = v_out
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> net(2 * n);
  auto add = [&](int a, int b, int c) {
    net[a].push_back({b, static_cast<int>(net[b].size()), c});
    net[b].push_back({a, static_cast<int>(net[a].size()) - 1, 0});
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? cap + 1 : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }
  int flow = 0;
  const int src = 2 * s + 1, dst = 2 * t;
  while (flow < cap) {
    std::vector<std::pair<int, int>> via(2 * n, {-1, -1});
    std::queue<int> q;
    q.push(src);
    via[src] = {src, -1};
    while (!q.empty() && via[dst].first < 0) {
      int x = q.front();
      q.pop();
      for (size_t k = 0; k < net[x].size(); ++k) {
        const Arc& a = net[x][k];
        if (a.cap > 0 && via[a.to].first < 0) {
          via[a.to] = {x, static_cast<int>(k)};
          q.push(a.to);
        }
      }
    }
    if (via[dst].first < 0) break;
    for (int x = dst; x != src;) {
      auto [p, k] = via[x];
      Arc& a = net[p][k];
      a.cap -= 1;
      net[x][a.rev].cap += 1;
      x = p;
    }
    ++flow;
  }
  return flow;
}

inline bool three_connected_by_flow(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4 || !is_connected(g)) return false;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (g.find_edge(s, t) < 0 && local_connectivity(g, s, t, 3) < 3) return false;
  // Adjacent pairs only matter through non-adjacent ones unless g is
  // complete, and K_n with n >= 4 is 3-connected.
  return true;
}

inline bool all_cycles_even(const Graph& g, const EdgeSet& m) {
  for (const auto& c : all_cycles(g)) {
    int k = 0;
    for (int e : c) k += m[e];
    if (k % 2) return false;
  }
  return true;
}

// Small fixed graphs.
inline Graph make_graph(int n, std::vector<std::pair<int, int>> es) {
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  std::sort(es.begin(), es.end());
  return Graph(n, es);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return make_graph(n, es);
}

inline Graph k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph k33() {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.push_back({a, b});
  return make_graph(6, es);
}

inline Graph cube() {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) es.push_back({v, v ^ bit});
  return make_graph(8, es);
}

// Canonical n=3 instance and the unsatisfiable n=9 fixture.
inline NaeFormula canonical_n3() { return NaeFormula{3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}; }

inline NaeFormula unsat_n9() {
  return NaeFormula{9, {{2, 4, 7}, {4, 5, 6}, {1, 7, 8}, {3, 5, 8}, {5, 7, 9}, {1, 2, 3},
                        {1, 4, 6}, {2, 8, 9}, {3, 4, 9}, {5, 8, 9}, {3, 6, 7}, {1, 2, 6}}};
}

// Two five-variable blocks sharing variable 1, which is a cutvertex of the
// incidence graph.
inline NaeFormula cutvertex_n9() {
  return NaeFormula{9, {{1, 2, 3}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5},
                        {1, 6, 7}, {1, 8, 9}, {6, 7, 8}, {6, 7, 9}, {6, 8, 9}, {7, 8, 9}}};
}

}  // namespace pmcut::testing
