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
#include <memory>

#include "pmcut/graph.hpp"
#include "pmcut/search.hpp"

namespace pmcut {

struct LearningStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learned = 0;
};

// The same search space and branching rule as PmcSearch (lowest undecided
// edge, In first) with conflict analysis: every conflict is explained back
// to the decisions that caused it, the explanation is kept as a clause over
// edge states, and the search jumps back to the deepest decision it
// involves. Learned clauses are implied by the problem, so the first
// solution found is still the lexicographically smallest one.
class LearningSearch {
 public:
  explicit LearningSearch(const Graph& g);
  ~LearningSearch();
  LearningSearch(const LearningSearch&) = delete;
  LearningSearch& operator=(const LearningSearch&) = delete;

  // budget caps the number of decisions.
  SearchOutcome find_first(std::uint64_t budget, EdgeSet* out,
                           LearningStats* stats = nullptr);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pmcut
