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

#include "pmcut/formula.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "adjacency.hpp"
#include "pmcut/error.hpp"

namespace pmcut {

bool NaeFormula::is_e4() const {
  if (n % 3 != 0 || m() * 3 != n * 4) return false;
  std::vector<int> occ(n + 1, 0);
  for (const Clause& c : clauses) {
    for (int x : c) {
      if (x < 1 || x > n) return false;
      ++occ[x];
    }
  }
  return std::all_of(occ.begin() + 1, occ.end(), [](int k) { return k == 4; });
}

void validate_formula(const NaeFormula& f, bool require_e4) {
  if (f.n < 0) Fail(ErrorKind::kInvalid, "negative variable count");
  for (int j = 0; j < f.m(); ++j) {
    const Clause& c = f.clauses[j];
    for (int x : c) {
      if (x < 1 || x > f.n) {
        Fail(ErrorKind::kInvalid, "clause " + std::to_string(j + 1) +
                                      ": variable index out of range");
      }
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      Fail(ErrorKind::kInvalid,
           "clause " + std::to_string(j + 1) + ": non-distinct literals");
    }
  }
  if (!require_e4) return;
  if (f.n % 3 != 0) Fail(ErrorKind::kInvalid, "n is not a multiple of 3");
  if (f.m() * 3 != f.n * 4) Fail(ErrorKind::kInvalid, "m != 4n/3");
  std::vector<int> occ(f.n + 1, 0);
  for (const Clause& c : f.clauses)
    for (int x : c) ++occ[x];
  for (int x = 1; x <= f.n; ++x) {
    if (occ[x] != 4) {
      Fail(ErrorKind::kInvalid, "E4 violation: variable " + std::to_string(x) +
                                    " occurs " + std::to_string(occ[x]) +
                                    " times");
    }
  }
}

NaeFormula parse_formula(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int declared_m = 0;
  NaeFormula f;
  auto syntax = [&](const std::string& msg) {
    Fail(ErrorKind::kSyntax, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      long long n = -1, m = -1;
      ls >> tag >> n >> m;
      if (tag != "nae3sat-e4" || ls.fail() || n < 0 || m < 0)
        syntax("expected header 'nae3sat-e4 <n> <m>'");
      std::string rest;
      if (ls >> rest) syntax("trailing tokens in header");
      if (n > 1000000 || m > 1000000) syntax("header counts too large");
      f.n = static_cast<int>(n);
      declared_m = static_cast<int>(m);
      have_header = true;
      continue;
    }
    Clause c{};
    for (int& x : c) {
      long long v;
      if (!(ls >> v)) syntax("expected three variable indices");
      if (v < 1 || v > f.n) syntax("variable index out of range");
      x = static_cast<int>(v);
    }
    std::string rest;
    if (ls >> rest) syntax("trailing tokens after clause");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      syntax("non-distinct literals");
    f.clauses.push_back(c);
  }
  if (!have_header) Fail(ErrorKind::kSyntax, "missing header");
  if (f.m() != declared_m) {
    Fail(ErrorKind::kSyntax, "header declares " + std::to_string(declared_m) +
                                 " clauses, found " + std::to_string(f.m()));
  }
  validate_formula(f, true);
  return f;
}

std::string serialize_formula(const NaeFormula& f) {
  std::ostringstream out;
  out << "nae3sat-e4 " << f.n << ' ' << f.m() << '\n';
  for (const Clause& c : f.clauses)
    out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  return out.str();
}

bool nae_satisfies(const NaeFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.n)
    Fail(ErrorKind::kPrecondition, "assignment length differs from n");
  for (const Clause& c : f.clauses) {
    int s = a[c[0] - 1] + a[c[1] - 1] + a[c[2] - 1];
    if (s == 0 || s == 3) return false;
  }
  return true;
}

Assignment complement(const Assignment& a) {
  Assignment b(a.size());
  for (size_t i = 0; i < a.size(); ++i) b[i] = a[i] ^ 1;
  return b;
}

std::optional<Assignment> solve_nae_bruteforce(const NaeFormula& f,
                                               int max_vars) {
  if (f.n > max_vars) {
    Fail(ErrorKind::kGuard, "solve_nae_bruteforce: n=" + std::to_string(f.n) +
                                " exceeds guard " + std::to_string(max_vars));
  }
  if (f.n == 0) {
    if (f.clauses.empty()) return Assignment{};
    return std::nullopt;
  }
  // Clause masks over the bit vector; x_1 is bit 0 and stays 0 (side A).
  std::vector<std::uint32_t> masks;
  for (const Clause& c : f.clauses)
    masks.push_back((1u << (c[0] - 1)) | (1u << (c[1] - 1)) | (1u << (c[2] - 1)));
  const std::uint32_t limit = 1u << (f.n - 1);
  for (std::uint32_t k = 0; k < limit; ++k) {
    std::uint32_t bits = k << 1;
    bool ok = true;
    for (std::uint32_t cm : masks) {
      std::uint32_t on = bits & cm;
      if (on == 0 || on == cm) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(f.n);
      for (int i = 0; i < f.n; ++i) a[i] = (bits >> i) & 1;
      return a;
    }
  }
  return std::nullopt;
}

IncidenceGraph incidence_graph(const NaeFormula& f) {
  IncidenceGraph g;
  g.n = f.n;
  g.m = f.m();
  g.adj.assign(g.n + g.m, {});
  for (int j = 0; j < g.m; ++j) {
    for (int x : f.clauses[j]) {
      g.adj[x - 1].push_back(g.n + j);
      g.adj[g.n + j].push_back(x - 1);
    }
  }
  return g;
}

namespace {

using detail::articulation_points;
using detail::components;

// Builds the sub-formula induced by a set of clause indices (ascending) and
// the variables they mention, keeping clause order.
SubFormula induce(const NaeFormula& f, const std::vector<int>& original,
                  const std::vector<int>& clause_ids,
                  const std::vector<int>& extra_vars) {
  std::vector<int> vars = extra_vars;
  for (int j : clause_ids)
    for (int x : f.clauses[j]) vars.push_back(x);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  SubFormula out;
  out.formula.n = static_cast<int>(vars.size());
  for (int x : vars) out.original.push_back(original[x - 1]);
  for (int j : clause_ids) {
    Clause c{};
    for (int t = 0; t < 3; ++t) {
      c[t] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(),
                                               f.clauses[j][t]) -
                              vars.begin()) +
             1;
    }
    out.formula.clauses.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<int> variable_cutvertices(const NaeFormula& f) {
  IncidenceGraph g = incidence_graph(f);
  std::vector<bool> alive(g.adj.size(), true);
  std::vector<bool> cut = articulation_points(g.adj, alive);
  std::vector<int> out;
  for (int x = 0; x < f.n; ++x)
    if (cut[x]) out.push_back(x + 1);
  return out;
}

SplitResult split_variable_cutvertices_detailed(const NaeFormula& f) {
  validate_formula(f, false);
  SplitResult result;
  std::vector<int> identity(f.n);
  std::iota(identity.begin(), identity.end(), 1);
  if (f.n == 0 && f.clauses.empty()) {
    result.parts.push_back({f, {}});
    return result;
  }

  // Connected components first; they are not counted as splits.
  std::vector<SubFormula> work;
  {
    IncidenceGraph g = incidence_graph(f);
    std::vector<bool> alive(g.adj.size(), true);
    int count = 0;
    std::vector<int> comp = components(g.adj, alive, &count);
    for (int c = 0; c < count; ++c) {
      std::vector<int> cl, vars;
      for (int j = 0; j < f.m(); ++j)
        if (comp[f.n + j] == c) cl.push_back(j);
      for (int x = 0; x < f.n; ++x)
        if (comp[x] == c) vars.push_back(x + 1);
      work.push_back(induce(f, identity, cl, vars));
    }
  }

  while (!work.empty()) {
    SubFormula cur = std::move(work.front());
    work.erase(work.begin());
    std::vector<int> cuts = variable_cutvertices(cur.formula);
    if (cuts.empty()) {
      result.parts.push_back(std::move(cur));
      continue;
    }
    const int v = cuts.front();
    IncidenceGraph g = incidence_graph(cur.formula);
    std::vector<bool> alive(g.adj.size(), true);
    alive[v - 1] = false;
    int count = 0;
    std::vector<int> comp = components(g.adj, alive, &count);
    // X is the component holding the smallest clause index.
    const int x_comp = comp[g.n + 0];
    std::vector<int> x_clauses, y_clauses, x_vars{v}, y_vars{v};
    for (int j = 0; j < g.m; ++j)
      (comp[g.n + j] == x_comp ? x_clauses : y_clauses).push_back(j);
    for (int x = 0; x < g.n; ++x) {
      if (x == v - 1) continue;
      (comp[x] == x_comp ? x_vars : y_vars).push_back(x + 1);
    }
    ++result.splits;
    work.push_back(induce(cur.formula, cur.original, x_clauses, x_vars));
    work.push_back(induce(cur.formula, cur.original, y_clauses, y_vars));
  }
  return result;
}

std::vector<NaeFormula> split_variable_cutvertices(const NaeFormula& f) {
  std::vector<NaeFormula> out;
  for (SubFormula& s : split_variable_cutvertices_detailed(f).parts)
    out.push_back(std::move(s.formula));
  return out;
}

std::vector<NaeFormula> enumerate_e4_formulas(int n) {
  std::vector<NaeFormula> out;
  if (n % 3 != 0 || n < 0) return out;
  std::vector<Clause> triples;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
  const int m = 4 * n / 3;
  std::vector<int> occ(n + 1, 0);
  std::vector<Clause> chosen;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(chosen.size()) == m) {
      out.push_back({n, chosen});
      return;
    }
    // Once the first literal passes a variable that still lacks occurrences,
    // no later triple can supply them.
    int need = 1;
    while (need <= n && occ[need] == 4) ++need;
    for (size_t t = start; t < triples.size(); ++t) {
      const Clause& c = triples[t];
      if (c[0] > need) break;
      if (occ[c[0]] == 4 || occ[c[1]] == 4 || occ[c[2]] == 4) continue;
      for (int x : c) ++occ[x];
      chosen.push_back(c);
      rec(t);
      chosen.pop_back();
      for (int x : c) --occ[x];
    }
  };
  rec(0);
  return out;
}

NaeFormula random_e4_formula(int n, std::uint64_t seed, bool connected_blocks) {
  if (n <= 0 || n % 3 != 0)
    Fail(ErrorKind::kPrecondition, "random_e4_formula: n must be a positive multiple of 3");
  std::mt19937_64 rng(seed);
  std::vector<int> slots;
  for (int x = 1; x <= n; ++x)
    for (int k = 0; k < 4; ++k) slots.push_back(x);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::shuffle(slots.begin(), slots.end(), rng);
    NaeFormula f;
    f.n = n;
    bool ok = true;
    for (size_t i = 0; i < slots.size(); i += 3) {
      Clause c{slots[i], slots[i + 1], slots[i + 2]};
      std::sort(c.begin(), c.end());
      if (c[0] == c[1] || c[1] == c[2]) {
        ok = false;
        break;
      }
      f.clauses.push_back(c);
    }
    if (!ok) continue;
    if (connected_blocks) {
      IncidenceGraph g = incidence_graph(f);
      std::vector<bool> alive(g.adj.size(), true);
      int count = 0;
      components(g.adj, alive, &count);
      if (count != 1 || !variable_cutvertices(f).empty()) continue;
    }
    return f;
  }
  Fail(ErrorKind::kInternal, "random_e4_formula: rejection sampling gave up");
}

}  // namespace pmcut
