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

#include <optional>
#include <string>

#include "pmcut/graph.hpp"
#include "pmcut/reduction.hpp"

namespace pmcut {

// Graph file:
//   graph <V> <E>
//   <u> <v>            E lines, u < v, strictly increasing
//   embedding          optional, followed by V lines
//   rot <v> <d> <e_1 ... e_d>
// Blank lines and '#' comments are skipped. Syntax problems throw
// Error(kSyntax) with the line number; structural ones Error(kInvalid).
struct GraphFile {
  Graph graph;
  std::optional<PlaneEmbedding> embedding;
};

GraphFile parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g, const PlaneEmbedding* emb = nullptr);

// Matching file: "matching <k>" then k lines "u v".
EdgeSet parse_matching(const Graph& g, const std::string& text);
std::string serialize_matching(const Graph& g, const EdgeSet& m);

// Cut file: "cut <|A|>" then the A-side vertices, ascending, one per line.
Cut parse_cut(int vertex_count, const std::string& text);
std::string serialize_cut(const Cut& cut);

// Provenance of a reduction: vertex origins, connectors, crossings, S2 sets.
std::string serialize_provenance(const ReductionArtifact& a);

// Whole-file helpers. Throw Error(kIo).
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pmcut
