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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pmcut {

// Per-edge membership flags (candidate matching / cutset).
using EdgeSet = std::vector<std::uint8_t>;
// Per-vertex side bits; 0 is side A.
using Cut = std::vector<std::uint8_t>;

struct Incidence {
  int neighbor;
  int edge;
};

// Simple undirected graph with stable edge indices.
class Graph {
 public:
  Graph() = default;
  // Throws Error(kInvalid) on loops, parallel edges or out-of-range ends.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Incidences of v sorted by neighbor id.
  const std::vector<Incidence>& incident(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(inc_[v].size()); }
  int other(int e, int v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }
  // Edge index joining u and v, or -1.
  int find_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Incidence>> inc_;
};

// Rotation system: rot[v] lists v's incident edge indices clockwise.
struct PlaneEmbedding {
  std::vector<std::vector<int>> rot;
  bool empty() const { return rot.empty(); }
};

// A face walk as parallel vertex / edge sequences; edges[k] leaves
// vertices[k].
struct Face {
  std::vector<int> vertices;
  std::vector<int> edges;
};

bool is_connected(const Graph& g);
bool is_cubic(const Graph& g);
std::optional<Cut> is_bipartite(const Graph& g);

// Throws Error(kInvalid) when rot is not a permutation of each vertex's
// incident edges.
void validate_rotation(const Graph& g, const PlaneEmbedding& emb);

// Dart (a -> b along e) continues with the clockwise successor of e at b.
std::vector<Face> faces_from_embedding(const Graph& g,
                                       const PlaneEmbedding& emb);

// Euler check on a connected graph. Throws Error(kPrecondition) when g is
// disconnected.
bool is_planar_embedding(const Graph& g, const PlaneEmbedding& emb);

// V >= 4 and no vertex pair disconnects g. Implemented as "g - x is
// biconnected for every x", optionally split over `jobs` threads.
bool is_3_connected(const Graph& g, int jobs = 1, int max_vertices = 20000);

bool is_perfect_matching(const Graph& g, const EdgeSet& m);

// Parity BFS: an edge in m flips the side, any other edge keeps it. None on
// conflict or when m is empty. Vertex 0 of each component starts on side A.
std::optional<Cut> cut_from_edge_set(const Graph& g, const EdgeSet& m);

// Every facial walk meets m an even number of times (edges counted with
// multiplicity along the walk). Empty m is rejected. Checking the outer face
// too is harmless: its parity is the sum of the bounded ones.
bool is_cutset_via_cycle_basis(const Graph& g, const PlaneEmbedding& emb,
                               const EdgeSet& m);

inline bool same_side(const Cut& cut, int u, int v) { return cut[u] == cut[v]; }

EdgeSet edge_set_from_list(const Graph& g, const std::vector<int>& edges);
std::vector<int> edge_list(const EdgeSet& m);

}  // namespace pmcut
