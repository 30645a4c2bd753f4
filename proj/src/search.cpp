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

#include "pmcut/search.hpp"

#include <utility>

namespace pmcut {

namespace {

constexpr std::int8_t kUndecided = 0;
constexpr std::int8_t kIn = 1;
constexpr std::int8_t kOut = 2;

}  // namespace

struct PmcSearch::Impl {
  const Graph& g;
  std::vector<std::int8_t> state;
  std::vector<int> matched;    // In edge at v, or -1
  std::vector<int> undecided;  // undecided incident edges per vertex

  // Parity union-find: union by size, no path compression, so every union
  // can be undone. Members of a class form a circular list through next.
  std::vector<int> parent;
  std::vector<std::uint8_t> parity;  // relative to parent
  std::vector<int> size;
  std::vector<int> next;

  struct TrailEntry {
    bool is_union;
    int a;  // edge, or child root
    int b;  // unused, or parent root
  };
  std::vector<TrailEntry> trail;
  std::vector<std::pair<int, std::int8_t>> queue;
  bool broken = false;  // a fix() contradicted earlier fixes

  explicit Impl(const Graph& graph)
      : g(graph),
        state(graph.edge_count(), kUndecided),
        matched(graph.vertex_count(), -1),
        undecided(graph.vertex_count()),
        parent(graph.vertex_count()),
        parity(graph.vertex_count(), 0),
        size(graph.vertex_count(), 1),
        next(graph.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      undecided[v] = g.degree(v);
      parent[v] = v;
      next[v] = v;
    }
  }

  std::pair<int, int> find(int x) const {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }

  // After `child` was hung below `root`, any undecided edge from one of its
  // members into the merged class has a forced state. The splice left the
  // old members of child right after root in the ring.
  void scan_class(int child, int root) {
    int x = next[root];
    for (int k = size[child]; k > 0; --k, x = next[x]) {
      for (const Incidence& i : g.incident(x)) {
        if (state[i.edge] != kUndecided) continue;
        auto [rx, px] = find(x);
        auto [ry, py] = find(i.neighbor);
        if (rx == ry) queue.push_back({i.edge, (px ^ py) ? kIn : kOut});
      }
    }
  }

  bool unite(int a, int b, int want) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == want;
    if (size[ra] > size[rb]) std::swap(ra, rb);
    parent[ra] = rb;
    parity[ra] = static_cast<std::uint8_t>(pa ^ pb ^ want);
    size[rb] += size[ra];
    std::swap(next[ra], next[rb]);
    trail.push_back({true, ra, rb});
    scan_class(ra, rb);
    return true;
  }

  bool assign(int e, std::int8_t s) {
    if (state[e] == s) return true;
    if (state[e] != kUndecided) return false;
    state[e] = s;
    trail.push_back({false, e, 0});
    const auto [u, v] = g.edge(e);
    --undecided[u];
    --undecided[v];
    if (s == kIn) {
      if (matched[u] != -1 || matched[v] != -1) return false;
      matched[u] = e;
      matched[v] = e;
      for (int x : {u, v})
        for (const Incidence& i : g.incident(x))
          if (state[i.edge] == kUndecided) queue.push_back({i.edge, kOut});
    } else {
      for (int x : {u, v}) {
        if (matched[x] != -1) continue;
        if (undecided[x] == 0) return false;
        if (undecided[x] == 1) {
          for (const Incidence& i : g.incident(x)) {
            if (state[i.edge] == kUndecided) {
              queue.push_back({i.edge, kIn});
              break;
            }
          }
        }
      }
    }
    return unite(u, v, s == kIn ? 1 : 0);
  }

  bool propagate() {
    while (!queue.empty()) {
      auto [e, s] = queue.back();
      queue.pop_back();
      if (!assign(e, s)) {
        queue.clear();
        return false;
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      TrailEntry t = trail.back();
      trail.pop_back();
      if (t.is_union) {
        const int c = t.a, r = t.b;
        std::swap(next[c], next[r]);
        size[r] -= size[c];
        parent[c] = c;
        parity[c] = 0;
      } else {
        const int e = t.a;
        const auto [u, v] = g.edge(e);
        if (state[e] == kIn) {
          if (matched[u] == e) matched[u] = -1;
          if (matched[v] == e) matched[v] = -1;
        }
        state[e] = kUndecided;
        ++undecided[u];
        ++undecided[v];
      }
    }
  }

  // Degree-based forcing that no assignment triggers by itself.
  bool initial() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (matched[v] != -1) continue;
      if (undecided[v] == 0) return false;
      if (undecided[v] == 1)
        for (const Incidence& i : g.incident(v))
          if (state[i.edge] == kUndecided) queue.push_back({i.edge, kIn});
    }
    return propagate();
  }

  EdgeSet solution() const {
    EdgeSet m(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) m[e] = state[e] == kIn;
    return m;
  }

  SearchOutcome run(std::uint64_t budget,
                    const std::function<bool(const EdgeSet&)>& visit,
                    SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    st = SearchStats{};
    if (broken) return SearchOutcome::kNone;
    const size_t base = trail.size();
    if (!initial()) {
      undo_to(base);
      return SearchOutcome::kNone;
    }
    struct Frame {
      int edge;
      size_t mark;
      bool tried_out;
    };
    std::vector<Frame> frames;
    const int E = g.edge_count();
    bool found_any = false;
    int cursor = 0;
    auto finish = [&](SearchOutcome o) {
      undo_to(base);
      return o;
    };
    for (;;) {
      while (cursor < E && state[cursor] != kUndecided) ++cursor;
      bool dead = false;
      if (cursor == E) {
        if (g.vertex_count() > 0) {
          ++st.solutions;
          found_any = true;
          if (!visit(solution())) return finish(SearchOutcome::kFound);
        }
        dead = true;
      } else {
        if (++st.nodes > budget) return finish(SearchOutcome::kBudget);
        frames.push_back({cursor, trail.size(), false});
        queue.clear();
        if (!assign(cursor, kIn) || !propagate()) dead = true;
      }
      if (!dead) continue;
      // Backtrack to the deepest decision whose Out branch is untried.
      for (;;) {
        if (frames.empty())
          return finish(found_any ? SearchOutcome::kFound : SearchOutcome::kNone);
        Frame& f = frames.back();
        undo_to(f.mark);
        queue.clear();
        if (f.tried_out) {
          frames.pop_back();
          continue;
        }
        f.tried_out = true;
        if (++st.nodes > budget) return finish(SearchOutcome::kBudget);
        if (assign(f.edge, kOut) && propagate()) {
          cursor = f.edge + 1;
          break;
        }
      }
    }
  }
};

PmcSearch::PmcSearch(const Graph& g) : impl_(std::make_unique<Impl>(g)) {}
PmcSearch::~PmcSearch() = default;

bool PmcSearch::fix(int edge, bool in) {
  impl_->queue.clear();
  bool ok = impl_->assign(edge, in ? kIn : kOut) && impl_->propagate();
  if (!ok) impl_->broken = true;
  return ok;
}

SearchOutcome PmcSearch::find_first(std::uint64_t budget, EdgeSet* out,
                                    SearchStats* stats) {
  return impl_->run(
      budget,
      [&](const EdgeSet& m) {
        if (out) *out = m;
        return false;
      },
      stats);
}

SearchOutcome PmcSearch::enumerate(
    std::uint64_t budget, const std::function<bool(const EdgeSet&)>& visit,
    SearchStats* stats) {
  return impl_->run(budget, visit, stats);
}

}  // namespace pmcut
