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

#include "pmcut/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pmcut/error.hpp"

namespace pmcut {

namespace {

constexpr double kSlot = 24;     // vertical distance between bundle slots
constexpr double kStep = 18;     // horizontal distance between crossings
constexpr double kBoxW = 90;
constexpr double kMargin = 30;

std::string bundle_name(const Bundle& b) {
  return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(1);
  s << std::fixed << v;
  return s.str();
}

std::string svg(const ReductionArtifact& a) {
  const Drawing& d = a.drawing;
  const int slots = static_cast<int>(d.exit_order.size());
  const int q = static_cast<int>(d.quadruples.size());
  const double left = kMargin + kBoxW;
  const double right = left + kStep * (q + 1);
  const double width = right + kBoxW + kMargin;
  const double height = 2 * kMargin + kSlot * slots;
  auto y = [&](int slot) { return kMargin + kSlot * (slot + 0.5); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" font-family=\"monospace\" font-size=\"10\">\n";
  out << "<title>G(I): n=" << a.formula.n << " m=" << a.formula.m() << " q=" << q
      << "</title>\n";

  // Boxes span the slots of their bundles.
  auto box = [&](const char* cls, double x, int lo, int hi, const std::string& label) {
    out << "<g class=\"" << cls << "\"><rect x=\"" << fmt(x) << "\" y=\""
        << fmt(kMargin + kSlot * lo + 2) << "\" width=\"" << fmt(kBoxW) << "\" height=\""
        << fmt(kSlot * (hi - lo + 1) - 4)
        << "\" fill=\"#eef\" stroke=\"black\"/><text x=\"" << fmt(x + 6) << "\" y=\""
        << fmt(y(lo) + 4) << "\">" << label << "</text></g>\n";
  };
  std::map<int, std::pair<int, int>> var_span, clause_span;
  for (int s = 0; s < slots; ++s) {
    auto [it, fresh] = var_span.try_emplace(d.exit_order[s].first, s, s);
    if (!fresh) it->second.second = s;
  }
  for (int s = 0; s < static_cast<int>(d.entry_order.size()); ++s) {
    auto [it, fresh] = clause_span.try_emplace(d.entry_order[s].second, s, s);
    if (!fresh) it->second.second = s;
  }
  for (auto& [i, span] : var_span) box("variable", kMargin, span.first, span.second, "x" + std::to_string(i));
  for (auto& [j, span] : clause_span) box("clause", right, span.first, span.second, "C" + std::to_string(j));

  // Bundle tracks: replay the transpositions.
  std::vector<Bundle> cur = d.exit_order;
  std::map<Bundle, std::vector<std::pair<double, double>>> poly;
  for (int s = 0; s < slots; ++s) poly[cur[s]].push_back({left, y(s)});
  for (int k = 0; k < q; ++k) {
    const Drawing::Quadruple& qd = d.quadruples[k];
    const int t = qd.track;
    const double x = left + kStep * (k + 1);
    out << "<rect class=\"crossing\" x=\"" << fmt(x - 5) << "\" y=\"" << fmt(y(t) - 5)
        << "\" width=\"10\" height=\"" << fmt(kSlot + 10)
        << "\" fill=\"#fcc\" stroke=\"#a00\"><title>crossing " << k + 1 << ": "
        << bundle_name(qd.upper) << " x " << bundle_name(qd.lower) << "</title></rect>\n";
    poly[cur[t]].push_back({x - 4, y(t)});
    poly[cur[t]].push_back({x + 4, y(t + 1)});
    poly[cur[t + 1]].push_back({x - 4, y(t + 1)});
    poly[cur[t + 1]].push_back({x + 4, y(t)});
    std::swap(cur[t], cur[t + 1]);
  }
  for (int s = 0; s < slots; ++s) poly[cur[s]].push_back({right, y(s)});
  for (const Bundle& b : d.exit_order) {
    out << "<polyline class=\"bundle\" fill=\"none\" stroke=\"#335\" points=\"";
    bool first = true;
    for (auto [px, py] : poly[b]) {
      out << (first ? "" : " ") << fmt(px) << ',' << fmt(py);
      first = false;
    }
    out << "\"><title>bundle " << bundle_name(b) << "</title></polyline>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string dot(const ReductionArtifact& a) {
  const Drawing& d = a.drawing;
  std::ostringstream out;
  out << "graph G {\n  rankdir=LR;\n  node [shape=box];\n";
  for (int i = 1; i <= a.formula.n; ++i) out << "  x" << i << " [label=\"x" << i << "\"];\n";
  for (int j = 1; j <= a.formula.m(); ++j) out << "  C" << j << " [label=\"C" << j << "\"];\n";
  for (size_t k = 0; k < d.quadruples.size(); ++k)
    out << "  X" << k + 1 << " [shape=diamond, style=filled, fillcolor=\"#ffcccc\", label=\"X"
        << k + 1 << "\"];\n";
  // Each bundle's route: variable, the crossings it meets, then its clause.
  std::map<Bundle, std::vector<std::string>> route;
  for (const Bundle& b : d.exit_order) route[b].push_back("x" + std::to_string(b.first));
  for (size_t k = 0; k < d.quadruples.size(); ++k) {
    route[d.quadruples[k].upper].push_back("X" + std::to_string(k + 1));
    route[d.quadruples[k].lower].push_back("X" + std::to_string(k + 1));
  }
  for (const Bundle& b : d.exit_order) {
    std::vector<std::string>& r = route[b];
    r.push_back("C" + std::to_string(b.second));
    for (size_t s = 0; s + 1 < r.size(); ++s)
      out << "  " << r[s] << " -- " << r[s + 1] << " [label=\"" << bundle_name(b) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string render(const ReductionArtifact& a, RenderFormat format) {
  if (a.drawing.exit_order.empty() || a.origin.empty())
    Fail(ErrorKind::kPrecondition, "render: artifact has no drawing provenance");
  return format == RenderFormat::kSvg ? svg(a) : dot(a);
}

}  // namespace pmcut
