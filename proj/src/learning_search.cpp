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

#include "pmcut/learning_search.hpp"

#include <algorithm>
#include <vector>

namespace pmcut {

namespace {

constexpr std::uint8_t kUnset = 0;
constexpr std::uint8_t kIn = 1;
constexpr std::uint8_t kOut = 2;

enum Reason : std::uint8_t {
  kDecision,
  kMatchOut,  // data: the In edge sharing a vertex
  kMatchIn,   // data: the vertex whose other edges are all Out
  kParity,    // ends already in one parity class
  kClause,    // data: learned clause index
};

// Literal 2e asserts e In, 2e+1 asserts e Out.
inline int lit_of(int e, std::uint8_t v) { return 2 * e + (v == kOut ? 1 : 0); }

}  // namespace

struct LearningSearch::Impl {
  const Graph& g;
  const int E;
  const int V;

  std::vector<std::uint8_t> val;
  std::vector<int> level;
  std::vector<std::uint8_t> reason;
  std::vector<int> rdata;
  std::vector<int> trail;
  std::vector<int> trail_lim;      // trail size at the start of each level
  std::vector<int> decision_edge;  // per level, 1-based levels at [l-1]
  size_t qhead = 0;

  std::vector<int> matched;
  std::vector<int> undecided;

  // Parity classes for queries, with a proof forest over real graph edges
  // for explanations. Both are undone on backjump.
  std::vector<int> parent;
  std::vector<std::uint8_t> parity;
  std::vector<int> size;
  std::vector<int> next;
  std::vector<int> pparent;
  std::vector<int> pedge;
  struct UnionRecord {
    int child, root, linked, old_proof_root, stamp;
  };
  std::vector<UnionRecord> unions;

  std::vector<std::vector<int>> clauses;
  std::vector<std::vector<int>> watches;

  std::vector<int> conflict;  // edges whose current states contradict
  std::vector<int> buffer;
  std::vector<std::uint8_t> seen;
  std::vector<int> mark;
  int mark_stamp = 0;

  explicit Impl(const Graph& graph)
      : g(graph),
        E(graph.edge_count()),
        V(graph.vertex_count()),
        val(E, kUnset),
        level(E, 0),
        reason(E, kDecision),
        rdata(E, -1),
        matched(V, -1),
        undecided(V),
        parent(V),
        parity(V, 0),
        size(V, 1),
        next(V),
        pparent(V, -1),
        pedge(V, -1),
        watches(2 * E),
        seen(E, 0),
        mark(V, 0) {
    for (int v = 0; v < V; ++v) {
      undecided[v] = g.degree(v);
      parent[v] = v;
      next[v] = v;
    }
  }

  int current_level() const { return static_cast<int>(trail_lim.size()); }

  std::pair<int, int> find(int x) const {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }

  void reroot(int x) {
    int prev = -1, prev_e = -1;
    while (x != -1) {
      int up = pparent[x], up_e = pedge[x];
      pparent[x] = prev;
      pedge[x] = prev_e;
      prev = x;
      prev_e = up_e;
      x = up;
    }
  }

  int proof_root(int x) const {
    while (pparent[x] != -1) x = pparent[x];
    return x;
  }

  // Edges on the proof-forest path between x and y (same tree).
  void proof_path(int x, int y, std::vector<int>& out) {
    ++mark_stamp;
    for (int a = x; a != -1; a = pparent[a]) mark[a] = mark_stamp;
    int lca = y;
    while (mark[lca] != mark_stamp) {
      out.push_back(pedge[lca]);
      lca = pparent[lca];
    }
    for (int a = x; a != lca; a = pparent[a]) out.push_back(pedge[a]);
  }

  void explain(int e, std::uint8_t r, int data, std::vector<int>& out) {
    switch (r) {
      case kDecision:
        break;
      case kMatchOut:
        out.push_back(data);
        break;
      case kMatchIn:
        for (const Incidence& i : g.incident(data))
          if (i.edge != e) out.push_back(i.edge);
        break;
      case kParity:
        proof_path(g.edge(e).first, g.edge(e).second, out);
        break;
      case kClause:
        for (int l : clauses[data])
          if (l / 2 != e) out.push_back(l / 2);
        break;
    }
  }

  // Returns false and fills `conflict` when e already holds the other state.
  bool enqueue(int e, std::uint8_t v, std::uint8_t r, int data) {
    if (val[e] == v) return true;
    if (val[e] != kUnset) {
      conflict.clear();
      conflict.push_back(e);
      explain(e, r, data, conflict);
      return false;
    }
    val[e] = v;
    level[e] = current_level();
    reason[e] = r;
    rdata[e] = data;
    trail.push_back(e);
    auto [a, b] = g.edge(e);
    --undecided[a];
    --undecided[b];
    if (v == kIn) {
      if (matched[a] == -1) matched[a] = e;
      if (matched[b] == -1) matched[b] = e;
    }
    return true;
  }

  void unassign(int e) {
    auto [a, b] = g.edge(e);
    if (matched[a] == e) matched[a] = -1;
    if (matched[b] == e) matched[b] = -1;
    ++undecided[a];
    ++undecided[b];
    val[e] = kUnset;
  }

  bool propagate_clauses(int e) {
    const int false_lit = lit_of(e, val[e]) ^ 1;
    std::vector<int>& ws = watches[false_lit];
    size_t keep = 0;
    for (size_t k = 0; k < ws.size(); ++k) {
      const int c = ws[k];
      std::vector<int>& cl = clauses[c];
      if (cl[0] == false_lit) std::swap(cl[0], cl[1]);
      auto is_true = [&](int l) { return val[l / 2] == ((l & 1) ? kOut : kIn); };
      auto is_false = [&](int l) {
        return val[l / 2] != kUnset && val[l / 2] != ((l & 1) ? kOut : kIn);
      };
      if (is_true(cl[0])) {
        ws[keep++] = c;
        continue;
      }
      bool moved = false;
      for (size_t t = 2; t < cl.size(); ++t) {
        if (!is_false(cl[t])) {
          std::swap(cl[1], cl[t]);
          watches[cl[1]].push_back(c);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = c;
      if (is_false(cl[0])) {
        conflict.clear();
        for (int l : cl) conflict.push_back(l / 2);
        for (size_t t = k + 1; t < ws.size(); ++t) ws[keep++] = ws[t];
        ws.resize(keep);
        return false;
      }
      if (!enqueue(cl[0] / 2, (cl[0] & 1) ? kOut : kIn, kClause, c)) {
        for (size_t t = k + 1; t < ws.size(); ++t) ws[keep++] = ws[t];
        ws.resize(keep);
        return false;
      }
    }
    ws.resize(keep);
    return true;
  }

  bool propagate_matching(int e) {
    auto [a, b] = g.edge(e);
    if (val[e] == kIn) {
      for (int x : {a, b}) {
        for (const Incidence& i : g.incident(x)) {
          if (i.edge != e && !enqueue(i.edge, kOut, kMatchOut, e)) return false;
        }
      }
      return true;
    }
    for (int x : {a, b}) {
      if (matched[x] != -1) continue;
      if (undecided[x] == 0) {
        conflict.clear();
        for (const Incidence& i : g.incident(x)) conflict.push_back(i.edge);
        return false;
      }
      if (undecided[x] == 1) {
        for (const Incidence& i : g.incident(x)) {
          if (val[i.edge] == kUnset) {
            if (!enqueue(i.edge, kIn, kMatchIn, x)) return false;
            break;
          }
        }
      }
    }
    return true;
  }

  bool propagate_parity(int e, int stamp) {
    auto [a, b] = g.edge(e);
    const int want = val[e] == kIn ? 1 : 0;
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) == want) return true;
      conflict.clear();
      conflict.push_back(e);
      proof_path(a, b, conflict);
      return false;
    }
    if (size[ra] > size[rb]) {
      std::swap(ra, rb);
      std::swap(a, b);
    }
    // a now lies in the smaller class; hang its proof tree below b.
    const int old_root = proof_root(a);
    reroot(a);
    pparent[a] = b;
    pedge[a] = e;
    parent[ra] = rb;
    parity[ra] = static_cast<std::uint8_t>(pa ^ pb ^ want);
    size[rb] += size[ra];
    std::swap(next[ra], next[rb]);
    unions.push_back({ra, rb, a, old_root, stamp});
    // After the splice the old members of ra follow rb in the ring.
    int x = next[rb];
    for (int k = size[ra]; k > 0; --k, x = next[x]) {
      for (const Incidence& i : g.incident(x)) {
        if (val[i.edge] != kUnset) continue;
        auto [rx, px] = find(x);
        auto [ry, py] = find(i.neighbor);
        if (rx == ry && !enqueue(i.edge, (px ^ py) ? kIn : kOut, kParity, -1))
          return false;
      }
    }
    return true;
  }

  bool propagate() {
    while (qhead < trail.size()) {
      const int stamp = static_cast<int>(qhead);
      const int e = trail[qhead++];
      if (!propagate_clauses(e)) return false;
      if (!propagate_matching(e)) return false;
      if (!propagate_parity(e, stamp)) return false;
    }
    return true;
  }

  void cancel_until(int lvl) {
    if (current_level() <= lvl) return;
    const int keep = trail_lim[lvl];
    while (!unions.empty() && unions.back().stamp >= keep) {
      const UnionRecord u = unions.back();
      unions.pop_back();
      std::swap(next[u.child], next[u.root]);
      size[u.root] -= size[u.child];
      parent[u.child] = u.child;
      parity[u.child] = 0;
      pparent[u.linked] = -1;
      pedge[u.linked] = -1;
      reroot(u.old_proof_root);
    }
    while (static_cast<int>(trail.size()) > keep) {
      unassign(trail.back());
      trail.pop_back();
    }
    trail_lim.resize(lvl);
    decision_edge.resize(lvl);
    qhead = trail.size();
  }

  // First-UIP analysis of `conflict`. Returns the learned clause with the
  // asserting literal first and the backjump level through bt.
  std::vector<int> analyze(int* bt) {
    std::vector<int> learnt{-1};
    int pending = 0;
    const int cur = current_level();
    auto absorb = [&](const std::vector<int>& edges) {
      for (int x : edges) {
        if (seen[x] || level[x] == 0) continue;
        seen[x] = 1;
        if (level[x] == cur)
          ++pending;
        else
          learnt.push_back(lit_of(x, val[x]) ^ 1);
      }
    };
    absorb(conflict);
    int idx = static_cast<int>(trail.size()) - 1;
    int uip = -1;
    for (;;) {
      while (!seen[trail[idx]]) --idx;
      uip = trail[idx];
      seen[uip] = 0;
      --pending;
      if (pending == 0) break;
      buffer.clear();
      explain(uip, reason[uip], rdata[uip], buffer);
      absorb(buffer);
      --idx;
    }
    learnt[0] = lit_of(uip, val[uip]) ^ 1;
    *bt = 0;
    size_t best = 1;
    for (size_t k = 1; k < learnt.size(); ++k) {
      seen[learnt[k] / 2] = 0;
      if (level[learnt[k] / 2] > *bt) {
        *bt = level[learnt[k] / 2];
        best = k;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[best]);
    return learnt;
  }

  bool initial() {
    for (int v = 0; v < V; ++v) {
      if (g.degree(v) == 0) return false;
      if (g.degree(v) == 1 && !enqueue(g.incident(v)[0].edge, kIn, kDecision, -1))
        return false;
    }
    return propagate();
  }

  SearchOutcome run(std::uint64_t budget, EdgeSet* out, LearningStats& st) {
    if (V == 0 || !initial()) return SearchOutcome::kNone;
    int cursor = 0;
    for (;;) {
      if (!propagate()) {
        ++st.conflicts;
        if (current_level() == 0) return SearchOutcome::kNone;
        int bt = 0;
        std::vector<int> learnt = analyze(&bt);
        cursor = std::min(cursor, decision_edge[bt]);
        cancel_until(bt);
        const int c = static_cast<int>(clauses.size());
        clauses.push_back(learnt);
        ++st.learned;
        if (learnt.size() > 1) {
          watches[learnt[0]].push_back(c);
          watches[learnt[1]].push_back(c);
        }
        const int asserted = learnt[0];
        enqueue(asserted / 2, (asserted & 1) ? kOut : kIn, kClause, c);
        continue;
      }
      while (cursor < E && val[cursor] != kUnset) ++cursor;
      if (cursor == E) {
        if (out) {
          out->assign(E, 0);
          for (int e = 0; e < E; ++e) (*out)[e] = val[e] == kIn;
        }
        return SearchOutcome::kFound;
      }
      if (++st.decisions > budget) return SearchOutcome::kBudget;
      trail_lim.push_back(static_cast<int>(trail.size()));
      decision_edge.push_back(cursor);
      enqueue(cursor, kIn, kDecision, -1);
    }
  }
};

LearningSearch::LearningSearch(const Graph& g)
    : impl_(std::make_unique<Impl>(g)) {}
LearningSearch::~LearningSearch() = default;

SearchOutcome LearningSearch::find_first(std::uint64_t budget, EdgeSet* out,
                                         LearningStats* stats) {
  LearningStats local;
  LearningStats& st = stats ? *stats : local;
  st = LearningStats{};
  return impl_->run(budget, out, st);
}

}  // namespace pmcut
