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
#include <map>
#include <string>
#include <vector>

#include "pmcut/graph.hpp"

namespace pmcut {

struct Point {
  double x = 0;
  double y = 0;
};

struct Port {
  std::string name;  // e.g. "t(2,5)" or "t'(2,5)" or "u1'"
  int vertex = -1;
  Point outward;     // direction the connector leaves in, drawing frame
};

enum class GadgetKind { kVariable, kClause, kCrossing };

const char* gadget_kind_name(GadgetKind k);

// A graph fragment with drawing coordinates. Ports have degree 2 inside the
// fragment and receive one connector each.
struct Gadget {
  GadgetKind kind = GadgetKind::kVariable;
  int index = 0;
  Graph graph;
  std::vector<std::string> names;      // primary label per vertex
  std::map<std::string, int> by_name;  // labels and aliases
  std::vector<Point> pos;
  // Polyline of each edge from edge(e).first to edge(e).second.
  std::vector<std::vector<Point>> path;
  std::vector<Port> ports;  // clockwise along the outer face
  EdgeSet red;
  std::map<std::string, std::vector<int>> cycles;  // named cycles, in order
  PlaneEmbedding embedding;  // fragment edges only

  int vertex(const std::string& label) const;  // throws on unknown label
  int edge(const std::string& a, const std::string& b) const;
  const Port& port(const std::string& name) const;
  // Direction of edge e leaving vertex v, drawing frame.
  Point direction(int e, int v) const;
};

// Occurrence clauses j < k < p < q of variable i.
Gadget build_variable_gadget(int i, const std::array<int, 4>& clauses);
// Variables a < b < c of clause j.
Gadget build_clause_gadget(int j, const std::array<int, 3>& vars);
Gadget build_crossing_gadget();

// Edge lists of the clause type sets, as label pairs and as edge indices.
struct ClauseTypeSets {
  std::array<std::vector<int>, 3> L;  // on u-vertices
  std::array<std::vector<int>, 3> R;  // mirrored on v-vertices
};

// The three displayed u-pair lists, 1-based u indices.
const std::array<std::vector<std::pair<int, int>>, 3>& clause_type_pairs();

ClauseTypeSets clause_type_sets(const Gadget& clause);

// Vertices of U_j and V_j.
std::vector<int> clause_uv_vertices(const Gadget& clause);

// Which type (1..3) a restriction shows on U_j and V_j, or 0 if none.
int clause_type_of(const Gadget& clause, const EdgeSet& restriction);

struct CrossingTypeSets {
  EdgeSet P1;  // every square takes its two port-to-inner edges
  EdgeSet P2;  // every square takes port-port plus inner-inner
};

CrossingTypeSets crossing_type_sets(const Gadget& crossing);

// Every edge subset that is a perfect matching of the fragment (ports
// included) and parity-consistent on it. Lexicographic order. Throws
// Error(kGuard) above max_vertices and Error(kBudget) past the node cap.
std::vector<EdgeSet> enumerate_local_pmcs(const Gadget& g,
                                          int max_vertices = 120,
                                          std::uint64_t node_cap = 1000000);

// Port-by-port relation: same[a][b] is true when ports a and b end up on
// the same side. Throws Error(kPrecondition) if the restriction is not
// admissible.
struct SideTable {
  std::vector<std::string> ports;
  std::vector<std::vector<std::uint8_t>> same;
  bool same_side(const std::string& a, const std::string& b) const;
};

SideTable side_relations(const Gadget& g, const EdgeSet& restriction);

// Sides of all fragment vertices under an admissible restriction.
Cut local_sides(const Gadget& g, const EdgeSet& restriction);

// Structural checks every gadget must pass.
struct GadgetAudit {
  bool degrees = false;    // internal vertices 3, ports 2
  bool bipartite = false;
  bool embedding = false;  // rotation valid and Euler holds
  bool ports_outer = false;
  bool exposed_even = false;
  std::vector<std::string> port_order;  // clockwise along the outer face
  std::vector<int> exposed_sizes;       // vertices on each exposed path
  bool ok() const {
    return degrees && bipartite && embedding && ports_outer && exposed_even;
  }
};

GadgetAudit audit_gadget(const Gadget& g);

}  // namespace pmcut

namespace pmcut {

// Census check of one gadget kind: audit, size, number of local PMCs and
// membership of the expected restrictions (the red set, one element per
// clause type, P1 and P2).
struct CensusReport {
  GadgetKind kind = GadgetKind::kVariable;
  int vertices = 0;
  int ports = 0;
  int census = 0;
  int expected = 0;
  bool audit_ok = false;
  bool membership_ok = false;
  std::vector<std::string> notes;  // trace differences on failure
  bool ok() const { return audit_ok && membership_ok && census == expected; }
};

// Variable 1, clause 3, crossing 8 (the inner square admits an even number
// of flips only).
inline constexpr int kExpectedCensus[3] = {1, 3, 8};

std::vector<CensusReport> verify_gadget_censuses();

}  // namespace pmcut
