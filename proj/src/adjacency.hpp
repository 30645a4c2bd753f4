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

// Plain adjacency-list helpers shared by the formula and graph modules.

#include <algorithm>
#include <vector>

namespace pmcut::detail {

using AdjList = std::vector<std::vector<int>>;

// Articulation points restricted to nodes with alive[v] set. Iterative
// lowpoint DFS so deep graphs do not blow the stack.
inline std::vector<bool> articulation_points(const AdjList& adj,
                                             const std::vector<bool>& alive) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<size_t> it(n, 0);
  std::vector<bool> cut(n, false);
  std::vector<int> stack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (!alive[root] || disc[root] != -1) continue;
    int root_children = 0;
    stack.assign(1, root);
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] < adj[v].size()) {
        int w = adj[v][it[v]++];
        if (!alive[w]) continue;
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut[p] = true;
        }
      }
    }
    if (root_children > 1) cut[root] = true;
  }
  return cut;
}

inline std::vector<int> components(const AdjList& adj,
                                   const std::vector<bool>& alive,
                                   int* count) {
  std::vector<int> comp(adj.size(), -1);
  std::vector<int> st;
  int c = 0;
  for (size_t s = 0; s < adj.size(); ++s) {
    if (!alive[s] || comp[s] != -1) continue;
    st.assign(1, static_cast<int>(s));
    comp[s] = c;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v]) {
        if (alive[w] && comp[w] == -1) {
          comp[w] = c;
          st.push_back(w);
        }
      }
    }
    ++c;
  }
  *count = c;
  return comp;
}

}  // namespace pmcut::detail
