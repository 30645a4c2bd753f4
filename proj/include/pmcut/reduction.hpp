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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmcut/formula.hpp"
#include "pmcut/gadgets.hpp"
#include "pmcut/graph.hpp"

namespace pmcut {

// A bundle is the wire pair of one occurrence: (variable i, clause j).
using Bundle = std::pair<int, int>;

struct Connector {
  int u = -1;
  int v = -1;
  int var = 0;
};

// H(I): gadgets joined directly by the two connectors of every occurrence.
struct HGraph {
  NaeFormula formula;
  std::vector<Gadget> variables;  // index i-1
  std::vector<Gadget> clauses;    // index j-1
  std::vector<int> variable_base;
  std::vector<int> clause_base;
  Graph graph;
  std::vector<Connector> connectors;
};

// Variable column on the left, clause column on the right. Bundles leave
// the variable column top to bottom (variables n..1, clauses descending
// within each) and reach the clause column top to bottom (clauses m..1,
// variables a, b, c within each). Every adjacent transposition of the
// bubble sort from exit order to entry order is one bundle crossing.
struct Drawing {
  struct Quadruple {
    Bundle upper;  // bundle on the upper track pair before the swap
    Bundle lower;
    int track = 0;  // slot index of the upper bundle
  };
  std::vector<Bundle> exit_order;
  std::vector<Bundle> entry_order;
  std::vector<Quadruple> quadruples;
};

struct VertexOrigin {
  GadgetKind kind = GadgetKind::kVariable;
  int index = 0;  // variable i, clause j, or crossing number (1-based)
  std::string name;
};

// One wire from a variable anchor to its clause anchor, listing the
// crossing gadgets it passes and the ports used in each.
struct WireRoute {
  Bundle bundle;
  bool top = true;
  struct Hop {
    int crossing = 0;  // 0-based
    std::string in_port;
    std::string out_port;
  };
  std::vector<Hop> hops;
};

struct CrossingRecord {
  Bundle upper;  // enters u1/u2, leaves v1/v2
  Bundle lower;  // enters v1'/v2', leaves u1'/u2'
  int base = 0;
};

struct ReductionArtifact {
  NaeFormula formula;
  Graph graph;
  PlaneEmbedding embedding;
  std::vector<VertexOrigin> origin;
  std::vector<Connector> connectors;
  std::map<std::string, int> anchors;  // "t(i,j)", "b(i,j)", "t'(i,j)", ...
  std::vector<std::vector<int>> s2;    // per variable, S_i^2 vertices
  std::vector<int> variable_base;
  std::vector<int> clause_base;
  std::vector<CrossingRecord> crossings;
  std::vector<WireRoute> wires;
  Drawing drawing;

  int q() const { return static_cast<int>(crossings.size()); }
};

// Occurrence clauses of variable i (1-based), ascending.
std::vector<int> occurrences(const NaeFormula& f, int i);

HGraph build_h(const NaeFormula& f);
Drawing layout(const HGraph& h);
ReductionArtifact planarize(const HGraph& h, const Drawing& d);

// Validates f, rejects formulas whose incidence graph is disconnected or has
// a variable cutvertex (split them first), then runs the three steps.
ReductionArtifact reduce(const NaeFormula& f);

// Global edge id of a gadget-local edge.
int global_edge(const ReductionArtifact& a, int base, const Gadget& g,
                int local_edge);

}  // namespace pmcut
