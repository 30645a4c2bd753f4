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
#include <functional>
#include <memory>
#include <vector>

#include "pmcut/graph.hpp"

namespace pmcut {

enum class SearchOutcome { kFound, kNone, kBudget };

struct SearchStats {
  std::uint64_t nodes = 0;  // branch attempts
  std::uint64_t solutions = 0;
};

// Complete backtracking over edge states {In, Out} with two closures:
// matching (one In edge per vertex, forced when all others are Out) and
// parity (In joins opposite sides, Out joins equal sides; an undecided edge
// whose ends fall into one parity class is forced). Branches on the lowest
// undecided edge, In before Out.
class PmcSearch {
 public:
  explicit PmcSearch(const Graph& g);
  ~PmcSearch();
  PmcSearch(const PmcSearch&) = delete;
  PmcSearch& operator=(const PmcSearch&) = delete;

  // Fixes an edge before searching. Returns false when this contradicts
  // what is already fixed.
  bool fix(int edge, bool in);

  // First solution in search order, i.e. the lexicographically smallest
  // perfect matching cut by sorted edge indices.
  SearchOutcome find_first(std::uint64_t budget, EdgeSet* out,
                           SearchStats* stats = nullptr);

  // Calls visit for every solution in lexicographic order; visit returns
  // false to stop early (the outcome is then kFound).
  SearchOutcome enumerate(std::uint64_t budget,
                          const std::function<bool(const EdgeSet&)>& visit,
                          SearchStats* stats = nullptr);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pmcut
