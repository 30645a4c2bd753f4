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

#include "pmcut/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pmcut/error.hpp"

namespace pmcut {

namespace {

// Yields non-blank, non-comment lines with their numbers.
class Lines {
 public:
  explicit Lines(const std::string& text) : in_(text) {}

  bool next(std::istringstream& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      out.clear();
      out.str(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    Fail(ErrorKind::kSyntax, "line " + std::to_string(lineno_) + ": " + msg);
  }

  void expect_end(std::istringstream& ls) const {
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }

 private:
  std::istringstream in_;
  int lineno_ = 0;
};

long long read_count(Lines& lines, std::istringstream& ls, long long cap) {
  long long v = -1;
  if (!(ls >> v) || v < 0) lines.fail("expected a non-negative count");
  if (v > cap) lines.fail("count too large");
  return v;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  Lines lines(text);
  std::istringstream ls;
  if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "missing header");
  std::string tag;
  ls >> tag;
  if (tag != "graph") lines.fail("expected header 'graph <V> <E>'");
  const int V = static_cast<int>(read_count(lines, ls, 10000000));
  const long long E = read_count(lines, ls, 30000000);
  lines.expect_end(ls);

  std::vector<std::pair<int, int>> edges;
  for (long long k = 0; k < E; ++k) {
    if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "header declares " + std::to_string(E) +
                                                      " edges, found " + std::to_string(k));
    long long u, v;
    if (!(ls >> u >> v)) lines.fail("expected 'u v'");
    lines.expect_end(ls);
    if (u < 0 || v < 0 || u >= V || v >= V) lines.fail("vertex out of range");
    if (u >= v) lines.fail("edge must satisfy u < v");
    std::pair<int, int> e{static_cast<int>(u), static_cast<int>(v)};
    if (!edges.empty() && !(edges.back() < e)) lines.fail("edges must be strictly increasing");
    edges.push_back(e);
  }
  GraphFile out;
  out.graph = Graph(V, edges);

  if (!lines.next(ls)) return out;
  ls >> tag;
  if (tag != "embedding") lines.fail("expected 'embedding' or end of file");
  lines.expect_end(ls);
  PlaneEmbedding emb;
  emb.rot.assign(V, {});
  std::vector<std::uint8_t> done(V, 0);
  for (int k = 0; k < V; ++k) {
    if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "embedding lists fewer than V rotations");
    long long v, d;
    if (!(ls >> tag >> v >> d) || tag != "rot") lines.fail("expected 'rot <v> <d> <edges>'");
    if (v < 0 || v >= V) lines.fail("vertex out of range");
    if (done[v]) lines.fail("duplicate rotation");
    done[v] = 1;
    if (d < 0 || d > E) lines.fail("bad degree");
    for (long long t = 0; t < d; ++t) {
      long long e;
      if (!(ls >> e)) lines.fail("rotation shorter than its degree");
      if (e < 0 || e >= E) lines.fail("edge index out of range");
      emb.rot[v].push_back(static_cast<int>(e));
    }
    lines.expect_end(ls);
  }
  if (lines.next(ls)) lines.fail("trailing content after embedding");
  validate_rotation(out.graph, emb);
  out.embedding = std::move(emb);
  return out;
}

std::string serialize_graph(const Graph& g, const PlaneEmbedding* emb) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (emb && !emb->empty()) {
    out << "embedding\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "rot " << v << ' ' << emb->rot[v].size();
      for (int e : emb->rot[v]) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

EdgeSet parse_matching(const Graph& g, const std::string& text) {
  Lines lines(text);
  std::istringstream ls;
  if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "missing header");
  std::string tag;
  ls >> tag;
  if (tag != "matching") lines.fail("expected header 'matching <k>'");
  const long long k = read_count(lines, ls, g.edge_count());
  lines.expect_end(ls);
  EdgeSet m(g.edge_count(), 0);
  for (long long t = 0; t < k; ++t) {
    if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "fewer edges than declared");
    long long u, v;
    if (!(ls >> u >> v)) lines.fail("expected 'u v'");
    lines.expect_end(ls);
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
      lines.fail("vertex out of range");
    int e = g.find_edge(static_cast<int>(u), static_cast<int>(v));
    if (e < 0) lines.fail("not an edge of the graph");
    if (m[e]) lines.fail("duplicate edge");
    m[e] = 1;
  }
  if (lines.next(ls)) lines.fail("trailing content");
  return m;
}

std::string serialize_matching(const Graph& g, const EdgeSet& m) {
  std::ostringstream out;
  out << "matching " << std::count(m.begin(), m.end(), 1) << '\n';
  for (int e = 0; e < g.edge_count(); ++e)
    if (m[e]) out << g.edge(e).first << ' ' << g.edge(e).second << '\n';
  return out.str();
}

Cut parse_cut(int vertex_count, const std::string& text) {
  Lines lines(text);
  std::istringstream ls;
  if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "missing header");
  std::string tag;
  ls >> tag;
  if (tag != "cut") lines.fail("expected header 'cut <size>'");
  const long long k = read_count(lines, ls, vertex_count);
  lines.expect_end(ls);
  Cut cut(vertex_count, 1);
  long long prev = -1;
  for (long long t = 0; t < k; ++t) {
    if (!lines.next(ls)) Fail(ErrorKind::kSyntax, "fewer vertices than declared");
    long long v;
    if (!(ls >> v)) lines.fail("expected a vertex");
    lines.expect_end(ls);
    if (v < 0 || v >= vertex_count) lines.fail("vertex out of range");
    if (v <= prev) lines.fail("vertices must be strictly increasing");
    prev = v;
    cut[v] = 0;
  }
  if (lines.next(ls)) lines.fail("trailing content");
  return cut;
}

std::string serialize_cut(const Cut& cut) {
  std::ostringstream out;
  out << "cut " << std::count(cut.begin(), cut.end(), 0) << '\n';
  for (size_t v = 0; v < cut.size(); ++v)
    if (cut[v] == 0) out << v << '\n';
  return out.str();
}

std::string serialize_provenance(const ReductionArtifact& a) {
  std::ostringstream out;
  for (size_t v = 0; v < a.origin.size(); ++v) {
    const VertexOrigin& o = a.origin[v];
    out << "vertex " << v << ' ' << gadget_kind_name(o.kind) << ' ' << o.index << ' '
        << o.name << '\n';
  }
  for (const Connector& c : a.connectors)
    out << "connector " << c.u << ' ' << c.v << " var " << c.var << '\n';
  for (size_t k = 0; k < a.crossings.size(); ++k) {
    const CrossingRecord& r = a.crossings[k];
    out << "crossing " << k + 1 << " bundles " << r.upper.first << ',' << r.upper.second
        << ' ' << r.lower.first << ',' << r.lower.second << '\n';
  }
  for (size_t i = 0; i < a.s2.size(); ++i) {
    out << "s2 " << i + 1;
    for (int v : a.s2[i]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) Fail(ErrorKind::kIo, "read error on " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorKind::kIo, "cannot write " + path);
  out << text;
  out.flush();
  if (!out) Fail(ErrorKind::kIo, "write error on " + path);
}

}  // namespace pmcut
