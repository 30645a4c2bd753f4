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

// pmcut command-line front end. Talks to the library through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmcut/pmcut.h"

namespace fs = std::filesystem;

namespace {

// Exit codes (sysexits.h values).
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;

struct Failure {
  int code;
  std::string message;
};

int exit_code(pmcut_status s) {
  switch (s) {
    case PMCUT_OK: return 0;
    case PMCUT_ERR_IO: return kExitIo;
    case PMCUT_ERR_INTERNAL:
    case PMCUT_ERR_ARGUMENT: return kExitInternal;
    default: return kExitData;
  }
}

void check(pmcut_status s) {
  if (s != PMCUT_OK) throw Failure{exit_code(s), pmcut_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Formula = std::unique_ptr<pmcut_formula, Deleter<pmcut_formula, pmcut_formula_free>>;
using GraphH = std::unique_ptr<pmcut_graph, Deleter<pmcut_graph, pmcut_graph_free>>;
using Artifact = std::unique_ptr<pmcut_artifact, Deleter<pmcut_artifact, pmcut_artifact_free>>;

std::string take(char* s) {
  std::string out(s ? s : "");
  pmcut_string_free(s);
  return out;
}

Formula read_formula(const std::string& path) {
  pmcut_formula* f = nullptr;
  check(pmcut_formula_read(path.c_str(), &f));
  return Formula(f);
}

GraphH read_graph(const std::string& path) {
  pmcut_graph* g = nullptr;
  check(pmcut_graph_read(path.c_str(), &g));
  return GraphH(g);
}

void require_readable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitIo, "cannot open " + path};
}

void require_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir, ec)) throw Failure{kExitIo, "cannot use output directory " + dir};
}

void require_writable_parent(const std::string& path) {
  fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec))
    throw Failure{kExitIo, "directory of " + path + " does not exist"};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Failure{kExitIo, "cannot write " + path};
}

std::string sides(const std::vector<uint8_t>& a) {
  std::string s;
  for (uint8_t x : a) {
    if (!s.empty()) s += ' ';
    s += x ? 'B' : 'A';
  }
  return s;
}

struct Options {
  std::string input;
  std::string out;
  std::string witness;
  std::string cut;
  std::string format = "svg";
  uint64_t seed = 0;
  uint64_t budget = 0;
  int jobs = 1;
  bool oracle = false;
};

int validate_formula(const Options& o) {
  require_readable(o.input);
  Formula f = read_formula(o.input);
  int cuts = 0, parts = 0, splits = 0;
  check(pmcut_formula_split_info(f.get(), &cuts, &parts, &splits));
  std::cout << "valid E4 formula: n=" << pmcut_formula_variables(f.get())
            << " m=" << pmcut_formula_clauses(f.get()) << '\n'
            << "variable cutvertices: " << cuts << '\n'
            << "parts after splitting: " << parts << " (splits " << splits << ")\n";
  return 0;
}

int solve_nae(const Options& o) {
  require_readable(o.input);
  Formula f = read_formula(o.input);
  std::vector<uint8_t> a(pmcut_formula_variables(f.get()));
  int sat = 0;
  check(pmcut_nae_solve(f.get(), &sat, a.data()));
  if (!sat) {
    std::cout << "UNSAT\n";
    return 1;
  }
  std::cout << "SAT\nassignment " << sides(a) << '\n';
  return 0;
}

int reduce(const Options& o) {
  require_readable(o.input);
  const std::string dir = o.out.empty() ? "." : o.out;
  require_dir(dir);
  Formula f = read_formula(o.input);
  pmcut_artifact* a = nullptr;
  check(pmcut_reduce(f.get(), &a));
  Artifact art(a);
  pmcut_graph* g = nullptr;
  check(pmcut_artifact_graph(art.get(), &g));
  GraphH graph(g);
  char* text = nullptr;
  check(pmcut_graph_serialize(graph.get(), &text));
  const std::string stem = fs::path(o.input).stem().string();
  const std::string gpath = (fs::path(dir) / (stem + ".graph")).string();
  const std::string ppath = (fs::path(dir) / (stem + ".prov")).string();
  write_text(gpath, take(text));
  check(pmcut_artifact_provenance(art.get(), &text));
  write_text(ppath, take(text));
  std::cout << "n=" << pmcut_formula_variables(f.get()) << " m=" << pmcut_formula_clauses(f.get())
            << " q=" << pmcut_artifact_crossings(art.get()) << " V=" << pmcut_graph_vertices(g)
            << " E=" << pmcut_graph_edges(g) << '\n'
            << "wrote " << gpath << '\n'
            << "wrote " << ppath << '\n';
  return 0;
}

int solve_pmc(const Options& o) {
  require_readable(o.input);
  if (!o.witness.empty()) require_writable_parent(o.witness);
  if (!o.cut.empty()) require_writable_parent(o.cut);
  GraphH g = read_graph(o.input);
  std::vector<uint8_t> m(pmcut_graph_edges(g.get()));
  pmcut_search r = PMCUT_NONE;
  uint64_t decisions = 0;
  if (o.oracle)
    check(pmcut_find_pmc_bruteforce(g.get(), &r, m.data()));
  else
    check(pmcut_find_pmc(g.get(), o.budget, &r, m.data(), &decisions));
  if (r == PMCUT_EXHAUSTED) {
    std::cout << "budget exhausted after " << decisions << " decisions\n";
    return 2;
  }
  if (r == PMCUT_NONE) {
    std::cout << "no perfect matching cut\n";
    return 1;
  }
  int pm = 0, cut = 0;
  check(pmcut_check_edge_set(g.get(), m.data(), &pm, &cut, nullptr));
  if (!pm || !cut) throw Failure{kExitInternal, "witness failed verification"};
  size_t k = 0;
  for (uint8_t x : m) k += x;
  std::cout << "perfect matching cut found: " << k << " edges";
  if (!o.oracle) std::cout << " (" << decisions << " decisions)";
  std::cout << '\n';
  char* text = nullptr;
  if (!o.witness.empty()) {
    check(pmcut_matching_serialize(g.get(), m.data(), &text));
    write_text(o.witness, take(text));
  }
  if (!o.cut.empty()) {
    std::vector<uint8_t> s(pmcut_graph_vertices(g.get()));
    int ok = 0;
    check(pmcut_cut_from_edge_set(g.get(), m.data(), &ok, s.data()));
    check(pmcut_cut_serialize(static_cast<int>(s.size()), s.data(), &text));
    write_text(o.cut, take(text));
  }
  return 0;
}

int verify_graph(const Options& o) {
  require_readable(o.input);
  GraphH g = read_graph(o.input);
  pmcut_graph_report r{};
  check(pmcut_graph_check(g.get(), o.jobs, &r));
  auto word = [](int v) { return v == 1 ? "yes" : v == 0 ? "no" : "unknown"; };
  std::cout << "vertices " << pmcut_graph_vertices(g.get()) << " edges "
            << pmcut_graph_edges(g.get()) << '\n'
            << "connected: " << word(r.connected) << '\n'
            << "cubic: " << word(r.cubic) << '\n'
            << "bipartite: " << word(r.bipartite) << '\n'
            << "planar: "
            << (r.planar == -1 ? "no embedding given" : word(r.planar)) << '\n'
            << "3-connected: " << word(r.three_connected) << '\n';
  const bool pass = r.connected == 1 && r.cubic == 1 && r.bipartite == 1 && r.planar == 1 &&
                    r.three_connected == 1;
  std::cout << "cubic bipartite planar 3-connected: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

int verify_gadgets(const Options&) {
  pmcut_gadget_report r[3];
  char* details = nullptr;
  check(pmcut_verify_gadgets(r, &details));
  std::string notes = take(details);
  bool all = true;
  for (const pmcut_gadget_report& x : r) {
    const bool ok = x.audit_ok && x.membership_ok && x.census == x.expected;
    all &= ok;
    std::cout << "gadget " << x.kind << " census " << x.census << " expected " << x.expected
              << ' ' << (ok ? "PASS" : "FAIL") << '\n';
  }
  std::cout << "gadget variable red set, clause types 1 2 3, crossing P1 P2 membership: "
            << ((r[0].membership_ok && r[1].membership_ok && r[2].membership_ok) ? "PASS" : "FAIL")
            << '\n';
  std::cout << notes;
  return all ? 0 : 1;
}

int roundtrip(const Options& o) {
  require_readable(o.input);
  Formula f = read_formula(o.input);
  const int n = pmcut_formula_variables(f.get());
  std::vector<uint8_t> truth(n);
  int sat = 0;
  check(pmcut_nae_solve(f.get(), &sat, truth.data()));
  pmcut_artifact* a = nullptr;
  check(pmcut_reduce(f.get(), &a));
  Artifact art(a);
  pmcut_graph* gp = nullptr;
  check(pmcut_artifact_graph(art.get(), &gp));
  GraphH g(gp);
  std::vector<uint8_t> m(pmcut_graph_edges(g.get()));
  pmcut_search r = PMCUT_NONE;
  check(pmcut_find_pmc(g.get(), o.budget, &r, m.data(), nullptr));
  if (r == PMCUT_EXHAUSTED) {
    std::cout << "SAT=" << (sat ? "yes" : "no") << " PMC=budget-exhausted\n";
    return 2;
  }
  const bool pmc = r == PMCUT_FOUND;
  std::cout << "SAT=" << (sat ? "yes" : "no") << " PMC=" << (pmc ? "yes" : "no");
  bool ok = sat == pmc;
  if (pmc) {
    std::vector<uint8_t> x(n);
    check(pmcut_assignment_from_pmc(art.get(), m.data(), x.data()));
    int valid = 0;
    check(pmcut_nae_satisfies(f.get(), x.data(), &valid));
    std::cout << " assignment " << (valid ? "NAE-valid" : "NAE-invalid");
    ok &= valid == 1;
    if (valid) {
      std::vector<uint8_t> mp(m.size());
      check(pmcut_pmc_from_assignment(art.get(), x.data(), mp.data()));
      int pm = 0, cut = 0;
      check(pmcut_check_edge_set(g.get(), mp.data(), &pm, &cut, nullptr));
      ok &= pm == 1 && cut == 1;
      std::cout << (pm && cut ? " M_P verified" : " M_P FAILED");
    }
    std::cout << "\nassignment " << sides(x);
  }
  std::cout << '\n' << "roundtrip: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int render(const Options& o) {
  require_readable(o.input);
  if (o.format != "svg" && o.format != "dot") throw Failure{kExitUsage, "format must be svg or dot"};
  if (!o.out.empty()) require_dir(o.out);
  Formula f = read_formula(o.input);
  pmcut_artifact* a = nullptr;
  check(pmcut_reduce(f.get(), &a));
  Artifact art(a);
  char* text = nullptr;
  check(pmcut_render(art.get(), o.format == "svg" ? PMCUT_RENDER_SVG : PMCUT_RENDER_DOT, &text));
  std::string doc = take(text);
  if (o.out.empty()) {
    std::cout << doc;
    return 0;
  }
  const std::string path =
      (fs::path(o.out) / (fs::path(o.input).stem().string() + "." + o.format)).string();
  write_text(path, doc);
  std::cout << "wrote " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pmcut: NAE-3SAT-E4 to perfect matching cut on Barnette graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--seed", o.seed, "Seed for random instance generation");
  app.add_option("--budget", o.budget, "Search budget in decisions (0 = default)");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", o.format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    const char* input;
  };
  const Command commands[] = {
      {"validate-formula", "Parse and validate a formula file", validate_formula, "formula"},
      {"solve-nae", "Brute-force NAE satisfiability", solve_nae, "formula"},
      {"reduce", "Write G(I) with embedding and provenance", reduce, "formula"},
      {"solve-pmc", "Search for a perfect matching cut", solve_pmc, "graph"},
      {"verify-graph", "Check cubic, bipartite, planar, 3-connected", verify_graph, "graph"},
      {"verify-gadgets", "Census and structure checks of the three gadgets", verify_gadgets,
       nullptr},
      {"roundtrip", "reduce, solve-pmc and map the witness back", roundtrip, "formula"},
      {"render", "Schematic SVG or DOT of a reduction", render, "formula"},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.input) sub->add_option(c.input, o.input, std::string("Input ") + c.input + " file")->required();
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--seed", o.seed, "Seed for random instance generation");
    sub->add_option("--budget", o.budget, "Search budget in decisions (0 = default)");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--format", o.format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));
    if (std::string(c.name) == "solve-pmc") {
      sub->add_flag("--oracle", o.oracle, "Use the brute-force oracle");
      sub->add_option("--witness", o.witness, "Write the matching here");
      sub->add_option("--cut", o.cut, "Write the cut here");
    }
    subs.push_back({sub, &c});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    for (auto& [sub, c] : subs)
      if (sub->parsed()) return c->run(o);
  } catch (const Failure& f) {
    std::cerr << "pmcut: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "pmcut: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
