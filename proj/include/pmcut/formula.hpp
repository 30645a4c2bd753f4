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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pmcut {

using Clause = std::array<int, 3>;

// A monotone NAE-3SAT instance. Variables are 1-based. The E4 shape (every
// variable in exactly four clauses) is checked by is_e4(); parse_formula
// enforces it, while the splitter may produce pieces that are not E4.
struct NaeFormula {
  int n = 0;
  std::vector<Clause> clauses;

  int m() const { return static_cast<int>(clauses.size()); }
  bool is_e4() const;
  bool operator==(const NaeFormula&) const = default;
};

// One bit per variable: 0 is side A, 1 is side B. Index 0 is x_1.
using Assignment = std::vector<std::uint8_t>;

// Throws Error(kInvalid) on any structural violation. With require_e4 the
// occurrence count and m = 4n/3 are also enforced.
void validate_formula(const NaeFormula& f, bool require_e4 = true);

NaeFormula parse_formula(const std::string& text);
std::string serialize_formula(const NaeFormula& f);

bool nae_satisfies(const NaeFormula& f, const Assignment& a);
Assignment complement(const Assignment& a);

// Exhausts the 2^(n-1) assignments with x_1 fixed to A.
std::optional<Assignment> solve_nae_bruteforce(const NaeFormula& f,
                                               int max_vars = 24);

// Bipartite incidence graph: variable nodes 0..n-1, clause nodes n..n+m-1.
struct IncidenceGraph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> adj;
};

IncidenceGraph incidence_graph(const NaeFormula& f);

// Variable indices (1-based) that are articulation points of inc(f).
std::vector<int> variable_cutvertices(const NaeFormula& f);

// A piece of the split together with the original index of each variable.
struct SubFormula {
  NaeFormula formula;
  std::vector<int> original;  // original[k-1] = source index of variable k
};

struct SplitResult {
  std::vector<SubFormula> parts;
  int splits = 0;  // cutvertex splits performed (component separation excluded)
};

SplitResult split_variable_cutvertices_detailed(const NaeFormula& f);
std::vector<NaeFormula> split_variable_cutvertices(const NaeFormula& f);

// All E4 formulas with n variables whose clause list is sorted, i.e. one
// representative per clause multiset. Practical for n <= 6.
std::vector<NaeFormula> enumerate_e4_formulas(int n);

// Uniform-ish random E4 formula by shuffled occurrence slots with rejection.
// When connected_blocks is set, retries until inc(f) is connected and has no
// variable cutvertex.
NaeFormula random_e4_formula(int n, std::uint64_t seed,
                             bool connected_blocks = true);

}  // namespace pmcut
