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
#include <string>
#include <vector>

#include "pmcut/formula.hpp"
#include "pmcut/graph.hpp"
#include "pmcut/learning_search.hpp"
#include "pmcut/reduction.hpp"
#include "pmcut/search.hpp"

namespace pmcut {

// Decisions allowed to find_pmc before it reports kBudget.
inline constexpr std::uint64_t kDefaultBudget = 5000000;

// Tries every perfect matching (lowest unmatched vertex first, neighbors in
// incidence order) and returns the first one that is a cutset. Throws
// Error(kGuard) above max_vertices.
std::optional<EdgeSet> find_pmc_bruteforce(const Graph& g,
                                           int max_vertices = 24);

struct PmcResult {
  SearchOutcome outcome = SearchOutcome::kNone;
  EdgeSet m;  // set when outcome is kFound
  LearningStats stats;
};

// Complete search. The witness is the lexicographically smallest PMC and is
// verified before it is returned. Throws Error(kPrecondition) when g is
// disconnected.
PmcResult find_pmc(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Reads each variable off its S2 hexagon. Throws Error(kPrecondition) when
// m is not a PMC and Error(kInternal) when some S2 is split.
Assignment assignment_from_pmc(const ReductionArtifact& a, const EdgeSet& m);

// Builds M_P gadget by gadget and verifies it. Throws Error(kPrecondition)
// when the assignment leaves a clause all-equal.
EdgeSet pmc_from_assignment(const ReductionArtifact& a, const Assignment& x);

struct OracleReport {
  int four_cycles = 0;
  int adjacent_square_pairs = 0;
  int six_cycles = 0;
  int hex_square_cycles = 0;
  int path_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Consequences every PMC of a cubic graph must satisfy: the induced 4-cycle
// dichotomy, agreement of adjacent disjoint 4-cycles, the six-outgoing rule
// on induced 6-cycles, empty intersection on 6-cycles flanked by squares
// (bipartite g only), and path parity against the cut on sampled pairs.
// Violations are reported, never thrown. Throws Error(kPrecondition) when g
// is not cubic.
OracleReport lemma_oracles(const Graph& g, const EdgeSet& m,
                           int path_samples = 64, std::uint64_t seed = 1);

}  // namespace pmcut
