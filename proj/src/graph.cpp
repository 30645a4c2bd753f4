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

#include "pmcut/graph.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "adjacency.hpp"
#include "pmcut/error.hpp"

namespace pmcut {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)), inc_(vertex_count) {
  if (n_ < 0) Fail(ErrorKind::kInvalid, "negative vertex count");
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      Fail(ErrorKind::kInvalid, "edge " + std::to_string(e) + " out of range");
    if (u == v) Fail(ErrorKind::kInvalid, "loop at vertex " + std::to_string(u));
    inc_[u].push_back({v, e});
    inc_[v].push_back({u, e});
  }
  for (int v = 0; v < n_; ++v) {
    auto& l = inc_[v];
    std::sort(l.begin(), l.end(),
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
    for (size_t k = 1; k < l.size(); ++k) {
      if (l[k].neighbor == l[k - 1].neighbor) {
        Fail(ErrorKind::kInvalid, "parallel edges between " +
                                      std::to_string(v) + " and " +
                                      std::to_string(l[k].neighbor));
      }
    }
  }
}

int Graph::find_edge(int u, int v) const {
  const auto& l = inc_[u];
  auto it = std::lower_bound(
      l.begin(), l.end(), v,
      [](const Incidence& a, int x) { return a.neighbor < x; });
  return (it != l.end() && it->neighbor == v) ? it->edge : -1;
}

namespace {

detail::AdjList adjacency(const Graph& g) {
  detail::AdjList adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const Incidence& i : g.incident(v)) adj[v].push_back(i.neighbor);
  return adj;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  int count = 0;
  detail::components(adjacency(g), std::vector<bool>(g.vertex_count(), true),
                     &count);
  return count == 1;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

std::optional<Cut> is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (const Incidence& i : g.incident(v)) {
        if (color[i.neighbor] == -1) {
          color[i.neighbor] = color[v] ^ 1;
          queue.push_back(i.neighbor);
        } else if (color[i.neighbor] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return Cut(color.begin(), color.end());
}

void validate_rotation(const Graph& g, const PlaneEmbedding& emb) {
  if (static_cast<int>(emb.rot.size()) != g.vertex_count())
    Fail(ErrorKind::kInvalid, "rotation system size differs from vertex count");
  std::vector<int> seen(g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& r = emb.rot[v];
    if (static_cast<int>(r.size()) != g.degree(v))
      Fail(ErrorKind::kInvalid, "rotation at " + std::to_string(v) +
                                    " has wrong length");
    for (int e : r) {
      if (e < 0 || e >= g.edge_count() ||
          (g.edge(e).first != v && g.edge(e).second != v) || seen[e] == v) {
        Fail(ErrorKind::kInvalid, "rotation at " + std::to_string(v) +
                                      " is not a permutation of its edges");
      }
      seen[e] = v;
    }
  }
}

std::vector<Face> faces_from_embedding(const Graph& g,
                                       const PlaneEmbedding& emb) {
  validate_rotation(g, emb);
  // Position of each edge within each endpoint's rotation.
  std::vector<std::pair<int, int>> pos(g.edge_count(), {-1, -1});
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int k = 0; k < static_cast<int>(emb.rot[v].size()); ++k) {
      int e = emb.rot[v][k];
      (g.edge(e).first == v ? pos[e].first : pos[e].second) = k;
    }
  }
  // Dart id: 2e for first -> second, 2e+1 for second -> first.
  std::vector<std::uint8_t> used(2 * g.edge_count(), 0);
  std::vector<Face> faces;
  for (int d0 = 0; d0 < 2 * g.edge_count(); ++d0) {
    if (used[d0]) continue;
    Face f;
    int d = d0;
    while (!used[d]) {
      used[d] = 1;
      int e = d / 2;
      int a = (d & 1) ? g.edge(e).second : g.edge(e).first;
      int b = g.other(e, a);
      f.vertices.push_back(a);
      f.edges.push_back(e);
      const auto& rb = emb.rot[b];
      int k = (g.edge(e).first == b) ? pos[e].first : pos[e].second;
      int next = rb[(k + 1) % rb.size()];
      d = 2 * next + (g.edge(next).first == b ? 0 : 1);
    }
    if (d != d0) Fail(ErrorKind::kInvalid, "face traversal did not close");
    faces.push_back(std::move(f));
  }
  return faces;
}

bool is_planar_embedding(const Graph& g, const PlaneEmbedding& emb) {
  if (!is_connected(g))
    Fail(ErrorKind::kPrecondition, "is_planar_embedding: graph is disconnected");
  if (g.vertex_count() == 0) return true;
  long long faces = static_cast<long long>(faces_from_embedding(g, emb).size());
  if (g.edge_count() == 0) faces = 1;  // a single vertex has one face
  return g.vertex_count() - g.edge_count() + faces == 2;
}

bool is_3_connected(const Graph& g, int jobs, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    Fail(ErrorKind::kGuard, "is_3_connected: " + std::to_string(n) +
                                " vertices exceeds guard " +
                                std::to_string(max_vertices));
  }
  if (n < 4 || !is_connected(g)) return false;
  const detail::AdjList adj = adjacency(g);
  std::atomic<bool> ok{true};
  std::atomic<int> next{0};
  auto worker = [&] {
    std::vector<bool> alive(n, true);
    for (int x = next++; x < n && ok; x = next++) {
      alive[x] = false;
      int count = 0;
      detail::components(adj, alive, &count);
      if (count != 1) {
        ok = false;
      } else {
        auto cut = detail::articulation_points(adj, alive);
        if (std::find(cut.begin(), cut.end(), true) != cut.end()) ok = false;
      }
      alive[x] = true;
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return ok;
}

bool is_perfect_matching(const Graph& g, const EdgeSet& m) {
  if (static_cast<int>(m.size()) != g.edge_count()) return false;
  std::vector<int> cover(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!m[e]) continue;
    ++cover[g.edge(e).first];
    ++cover[g.edge(e).second];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::optional<Cut> cut_from_edge_set(const Graph& g, const EdgeSet& m) {
  if (static_cast<int>(m.size()) != g.edge_count()) return std::nullopt;
  if (std::find(m.begin(), m.end(), 1) == m.end()) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (const Incidence& i : g.incident(v)) {
        int want = side[v] ^ (m[i.edge] ? 1 : 0);
        if (side[i.neighbor] == -1) {
          side[i.neighbor] = want;
          queue.push_back(i.neighbor);
        } else if (side[i.neighbor] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return Cut(side.begin(), side.end());
}

bool is_cutset_via_cycle_basis(const Graph& g, const PlaneEmbedding& emb,
                               const EdgeSet& m) {
  if (static_cast<int>(m.size()) != g.edge_count())
    Fail(ErrorKind::kPrecondition, "edge set size differs from edge count");
  if (std::find(m.begin(), m.end(), 1) == m.end()) return false;
  for (const Face& f : faces_from_embedding(g, emb)) {
    int hits = 0;
    for (int e : f.edges) hits += m[e];
    if (hits % 2) return false;
  }
  return true;
}

EdgeSet edge_set_from_list(const Graph& g, const std::vector<int>& edges) {
  EdgeSet m(g.edge_count(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count())
      Fail(ErrorKind::kInvalid, "edge index out of range");
    m[e] = 1;
  }
  return m;
}

std::vector<int> edge_list(const EdgeSet& m) {
  std::vector<int> out;
  for (size_t e = 0; e < m.size(); ++e)
    if (m[e]) out.push_back(static_cast<int>(e));
  return out;
}

}  // namespace pmcut
