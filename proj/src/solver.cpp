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

#include "pmcut/solver.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <random>
#include <set>

#include "pmcut/error.hpp"
#include "pmcut/gadgets.hpp"

namespace pmcut {

std::optional<EdgeSet> find_pmc_bruteforce(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    Fail(ErrorKind::kGuard, "brute force: " + std::to_string(n) +
                                " vertices, guard is " +
                                std::to_string(max_vertices));
  }
  if (n == 0 || n % 2) return std::nullopt;
  EdgeSet m(g.edge_count(), 0);
  std::vector<std::uint8_t> covered(n, 0);
  std::optional<EdgeSet> found;
  auto rec = [&](auto&& self, int from) -> bool {
    int v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      if (cut_from_edge_set(g, m)) {
        found = m;
        return true;
      }
      return false;
    }
    covered[v] = 1;
    for (const Incidence& i : g.incident(v)) {
      if (covered[i.neighbor]) continue;
      covered[i.neighbor] = 1;
      m[i.edge] = 1;
      if (self(self, v + 1)) return true;
      m[i.edge] = 0;
      covered[i.neighbor] = 0;
    }
    covered[v] = 0;
    return false;
  };
  rec(rec, 0);
  return found;
}

PmcResult find_pmc(const Graph& g, std::uint64_t budget) {
  if (!is_connected(g)) Fail(ErrorKind::kPrecondition, "find_pmc: graph is disconnected");
  PmcResult r;
  LearningSearch search(g);
  r.outcome = search.find_first(budget, &r.m, &r.stats);
  if (r.outcome != SearchOutcome::kFound) {
    r.m.clear();
    return r;
  }
  if (!is_perfect_matching(g, r.m) || !cut_from_edge_set(g, r.m))
    Fail(ErrorKind::kInternal, "find_pmc: witness failed verification");
  return r;
}

Assignment assignment_from_pmc(const ReductionArtifact& a, const EdgeSet& m) {
  if (!is_perfect_matching(a.graph, m))
    Fail(ErrorKind::kPrecondition, "not a perfect matching of G(I)");
  std::optional<Cut> cut = cut_from_edge_set(a.graph, m);
  if (!cut) Fail(ErrorKind::kPrecondition, "matching is not a cutset");
  Assignment x(a.formula.n, 0);
  for (int i = 0; i < a.formula.n; ++i) {
    const std::vector<int>& s2 = a.s2[i];
    for (int v : s2) {
      if ((*cut)[v] != (*cut)[s2.front()])
        Fail(ErrorKind::kInternal, "S2 of variable " + std::to_string(i + 1) + " is split");
    }
    x[i] = (*cut)[s2.front()];
  }
  return x;
}

EdgeSet pmc_from_assignment(const ReductionArtifact& a, const Assignment& x) {
  const NaeFormula& f = a.formula;
  if (static_cast<int>(x.size()) != f.n)
    Fail(ErrorKind::kPrecondition, "assignment length differs from n");
  for (int j = 0; j < f.m(); ++j) {
    const Clause& c = f.clauses[j];
    if (x[c[0] - 1] == x[c[1] - 1] && x[c[1] - 1] == x[c[2] - 1])
      Fail(ErrorKind::kPrecondition, "clause " + std::to_string(j + 1) + " is not satisfied");
  }
  EdgeSet m(a.graph.edge_count(), 0);
  auto take = [&](const Gadget& g, int base, const EdgeSet& local) {
    for (int e = 0; e < g.graph.edge_count(); ++e)
      if (local[e]) m[global_edge(a, base, g, e)] = 1;
  };

  for (int i = 1; i <= f.n; ++i) {
    std::vector<int> occ = occurrences(f, i);
    Gadget g = build_variable_gadget(i, {occ[0], occ[1], occ[2], occ[3]});
    take(g, a.variable_base[i - 1], g.red);
  }

  // All clause gadgets share one structure, so one census serves them all.
  std::vector<EdgeSet> census;
  for (int j = 1; j <= f.m(); ++j) {
    std::array<int, 3> v = f.clauses[j - 1];
    std::sort(v.begin(), v.end());
    Gadget g = build_clause_gadget(j, v);
    if (census.empty()) census = enumerate_local_pmcs(g);
    const std::uint8_t xa = x[v[0] - 1], xb = x[v[1] - 1], xc = x[v[2] - 1];
    const int type = (xa == xc) ? 1 : (xa == xb) ? 2 : 3;
    const EdgeSet* pick = nullptr;
    for (const EdgeSet& r : census)
      if (clause_type_of(g, r) == type) pick = &r;
    if (!pick) Fail(ErrorKind::kInternal, "clause census lacks a type " + std::to_string(type));
    take(g, a.clause_base[j - 1], *pick);
  }

  const Gadget crossing = build_crossing_gadget();
  const CrossingTypeSets p = crossing_type_sets(crossing);
  for (const CrossingRecord& r : a.crossings) {
    const bool agree = x[r.upper.first - 1] == x[r.lower.first - 1];
    take(crossing, r.base, agree ? p.P1 : p.P2);
  }

  if (!is_perfect_matching(a.graph, m) || !cut_from_edge_set(a.graph, m))
    Fail(ErrorKind::kInternal, "M_P failed verification");
  return m;
}

namespace {

// Cycles of length len through their smallest vertex, each listed once.
std::vector<std::vector<int>> short_cycles(const Graph& g, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<std::uint8_t> on(g.vertex_count(), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (g.find_edge(v, path.front()) >= 0 && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (const Incidence& i : g.incident(v)) {
      const int w = i.neighbor;
      if (w <= path.front() || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    on[s] = 1;
    rec(rec, s);
    on[s] = 0;
  }
  return out;
}

bool induced(const Graph& g, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  for (int x = 0; x < k; ++x)
    for (int y = x + 2; y < k; ++y)
      if (!(x == 0 && y == k - 1) && g.find_edge(c[x], c[y]) >= 0) return false;
  return true;
}

std::vector<int> cycle_edges(const Graph& g, const std::vector<int>& c) {
  std::vector<int> out;
  for (size_t k = 0; k < c.size(); ++k) out.push_back(g.find_edge(c[k], c[(k + 1) % c.size()]));
  return out;
}

std::vector<int> outgoing(const Graph& g, const std::vector<int>& c) {
  std::vector<int> out;
  for (int v : c)
    for (const Incidence& i : g.incident(v))
      if (std::find(c.begin(), c.end(), i.neighbor) == c.end()) out.push_back(i.edge);
  return out;
}

std::string cycle_text(const std::vector<int>& c) {
  std::string s;
  for (int v : c) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

// A path from u to v by BFS; `reverse` flips neighbor order for a second,
// usually different, path.
std::vector<int> bfs_path(const Graph& g, int u, int v, bool reverse) {
  std::vector<int> via(g.vertex_count(), -2);
  std::queue<int> q;
  via[u] = -1;
  q.push(u);
  while (!q.empty() && via[v] == -2) {
    int x = q.front();
    q.pop();
    const auto& inc = g.incident(x);
    for (size_t k = 0; k < inc.size(); ++k) {
      const Incidence& i = inc[reverse ? inc.size() - 1 - k : k];
      if (via[i.neighbor] != -2) continue;
      via[i.neighbor] = i.edge;
      q.push(i.neighbor);
    }
  }
  std::vector<int> path;
  if (via[v] == -2) return path;
  for (int x = v; x != u; x = g.other(via[x], x)) path.push_back(via[x]);
  return path;
}

}  // namespace

OracleReport lemma_oracles(const Graph& g, const EdgeSet& m, int path_samples,
                           std::uint64_t seed) {
  if (!is_cubic(g)) Fail(ErrorKind::kPrecondition, "structural oracles need a cubic graph");
  OracleReport r;
  auto count = [&](const std::vector<int>& es) {
    int k = 0;
    for (int e : es) k += m[e];
    return k;
  };

  std::vector<std::vector<int>> squares;
  for (auto& c : short_cycles(g, 4))
    if (induced(g, c)) squares.push_back(c);
  r.four_cycles = static_cast<int>(squares.size());
  std::vector<std::vector<int>> squares_on(g.edge_count());
  std::vector<std::vector<int>> squares_at(g.vertex_count());
  for (size_t s = 0; s < squares.size(); ++s) {
    const auto& c = squares[s];
    std::vector<int> es = cycle_edges(g, c);
    for (int e : es) squares_on[e].push_back(static_cast<int>(s));
    for (int v : c) squares_at[v].push_back(static_cast<int>(s));
    const int inside = count(es);
    const int out = count(outgoing(g, c));
    const bool a = inside == 0 && out == 4;
    const bool b = inside == 2 && m[es[0]] == m[es[2]] && out == 0;
    if (!a && !b) r.violations.push_back("square " + cycle_text(c) + ": neither case of the dichotomy");
  }

  std::set<std::pair<int, int>> pairs;
  for (size_t s = 0; s < squares.size(); ++s) {
    for (int v : squares[s]) {
      for (const Incidence& i : g.incident(v)) {
        for (int t : squares_at[i.neighbor]) {
          bool disjoint = true;
          for (int x : squares[s])
            for (int y : squares[t]) disjoint &= x != y;
          if (disjoint) pairs.insert({std::min<int>(s, t), std::max<int>(s, t)});
        }
      }
    }
  }
  for (auto [s, t] : pairs) {
    ++r.adjacent_square_pairs;
    const bool hs = count(cycle_edges(g, squares[s])) > 0;
    const bool ht = count(cycle_edges(g, squares[t])) > 0;
    if (hs != ht)
      r.violations.push_back("adjacent squares " + cycle_text(squares[s]) + " and " +
                             cycle_text(squares[t]) + " disagree");
  }

  const bool bipartite = is_bipartite(g).has_value();
  for (auto& c : short_cycles(g, 6)) {
    std::vector<int> es = cycle_edges(g, c);
    if (induced(g, c)) {
      ++r.six_cycles;
      std::vector<int> out = outgoing(g, c);
      const int k = count(out);
      if (k >= 3 && k != 6)
        r.violations.push_back("hexagon " + cycle_text(c) + ": " + std::to_string(k) +
                               " outgoing edges selected");
    }
    if (!bipartite) continue;
    // Edge k of the hexagon must lie on a square that touches the hexagon
    // only at that edge, so its hexagon neighbours are outgoing edges.
    auto flanked = [&](int k) {
      for (int s : squares_on[es[k]]) {
        int shared = 0;
        for (int v : squares[s]) shared += std::count(c.begin(), c.end(), v);
        if (shared == 2) return true;
      }
      return false;
    };
    bool pattern = false;
    for (int skip = 0; skip < 3 && !pattern; ++skip) {
      bool all = true;
      for (int k = 0; k < 6; ++k)
        if (k % 3 != skip && !flanked(k)) all = false;
      pattern = all;
    }
    if (!pattern) continue;
    ++r.hex_square_cycles;
    if (count(es) != 0)
      r.violations.push_back("hexagon " + cycle_text(c) + " flanked by squares meets M");
  }

  std::optional<Cut> cut = cut_from_edge_set(g, m);
  if (!cut) {
    r.violations.push_back("edge set is not a cutset");
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
  for (int s = 0; s < path_samples && g.vertex_count() > 1; ++s) {
    const int u = pick(rng), v = pick(rng);
    for (bool rev : {false, true}) {
      std::vector<int> p = bfs_path(g, u, v, rev);
      if (p.empty() && u != v) continue;
      ++r.path_checks;
      if ((count(p) % 2 == 0) != same_side(*cut, u, v))
        r.violations.push_back("path " + std::to_string(u) + "->" + std::to_string(v) +
                               " parity disagrees with the cut");
    }
  }
  return r;
}

}  // namespace pmcut
