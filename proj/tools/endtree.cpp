// Copyright 2026 The endtree Authors
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

// Command line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 window too small or the
// graph has a component with fewer than two ends, 3 invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "endtree/endtree.hpp"

namespace {

using namespace endtree;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRetry = 2;
constexpr int kExitInvariant = 3;

struct WindowArgs {
  std::size_t depth = 4;
  std::optional<std::size_t> margin;
  std::size_t threads = 1;

  Window window() const {
    Window w = Window::with_default_margin(depth);
    if (margin) w.margin = *margin;
    w.validate();
    return w;
  }
};

void add_window_options(CLI::App* cmd, WindowArgs& args) {
  cmd->add_option("--depth,-d", args.depth, "levels expanded per end")
      ->capture_default_str();
  cmd->add_option("--margin,-m", args.margin,
                  "levels excluded from reported results (default ceil(D/2))");
}

// A graph file, `-` or nothing for stdin, or `gen:SPEC` for a generator. A
// name that is not a readable file is also tried as a generator spec.
GraphPtr load_graph(const std::string& source) {
  if (source.rfind("gen:", 0) == 0) return generate(source.substr(4));
  if (source.empty() || source == "-") return parse_graph(std::cin);
  std::ifstream in(source);
  if (in) return parse_graph(in);
  try {
    return generate(source);
  } catch (const Error&) {
    throw Error(ErrorCode::kParse,
                "cannot open " + source + " and it is not a generator spec");
  }
}

int run_analyze(const std::string& source, std::size_t kmax,
                const WindowArgs& args) {
  GraphPtr g = load_graph(source);
  const Window w = args.window();
  Analysis a = analyze(g, w, {.threads = args.threads});
  std::ostringstream out;
  out << "graph " << g->name() << "\n";
  out << "window depth=" << w.depth << " margin=" << w.margin
      << " kmax=" << kmax << "\n";
  const std::vector<Cut> enumerated =
      enumerate_cuts(g, kmax, w, {.threads = args.threads});
  for (const auto& c : a.components) {
    if (c.k0 > kmax) {
      std::cerr << "component " << c.component << ": k0=" << c.k0
                << " exceeds kmax=" << kmax << "\n";
      return kExitRetry;
    }
    const auto count = std::count_if(
        enumerated.begin(), enumerated.end(),
        [&](const Cut& x) { return x.component() == c.component; });
    out << "component " << c.component << " ends=" << c.ends
        << " k0=" << c.k0 << " enumerated=" << count
        << " thin=" << c.thin.size() << " chat=" << c.selected.size()
        << " chat_interior=" << c.selected_interior_count()
        << " min_degree=" << c.min_degree << "\n";
    auto row = [&](const char* tag, std::size_t i) {
      out << tag << " k=" << c.k0 << " deg=" << c.degree[i]
          << " comp=" << c.component
          << " interior=" << (c.interior[i] ? "true" : "false")
          << " family=" << c.family[i] << " : " << c.thin[i].encoding()
          << "\n";
    };
    for (std::size_t i = 0; i < c.thin.size(); ++i) row("cut", i);
    for (std::size_t i : c.selected) row("chat", i);
  }
  std::cout << out.str();
  return kExitOk;
}

int run_tree(const std::string& source, const WindowArgs& args,
             const std::string& automorphisms) {
  GraphPtr g = load_graph(source);
  const Window w = args.window();
  Analysis a = analyze(g, w, {.threads = args.threads});
  std::vector<StructureTree> forest = build_structure_forest(a);
  std::ostringstream out;
  for (const auto& t : forest) out << emit_dot(t);
  if (!automorphisms.empty()) {
    std::ifstream in(automorphisms);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + automorphisms);
    std::vector<Automorphism> gens = parse_automorphisms(g, in);
    for (const auto& t : forest) {
      std::vector<Cut> cuts;
      for (const auto& v : t.vertices) {
        cuts.insert(cuts.end(), v.members.begin(), v.members.end());
      }
      out << "// component " << t.component << " invariant="
          << (check_invariance(cuts, gens) ? "true" : "false") << "\n";
    }
  }
  std::cout << out.str();
  return kExitOk;
}

int run_sets(const std::string& path) {
  ParsedSetSystem parsed;
  if (path.empty() || path == "-") {
    parsed = parse_set_system(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
    parsed = parse_set_system(in);
  }
  SetSystem<GroundSet> s = parsed.system();
  std::ostringstream out;
  out << "system sets=" << s.size() << " universe=" << parsed.universe->size()
      << " nested=" << (s.is_nested() ? "yes" : "no")
      << " self_dual=" << (s.is_self_dual() ? "yes" : "no") << "\n";
  if (auto bad = s.first_non_nested_pair()) {
    out << "not nested: " << s[bad->first].to_string() << " "
        << s[bad->second].to_string() << "\n";
    std::cout << out.str();
    return kExitUsage;
  }
  auto bases = enumerate_bases(s);
  out << "bases " << bases.size() << "\n";
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out << "basis " << i << ":";
    for (std::size_t m : bases[i]) out << " " << s[m].to_string();
    out << "\n";
  }
  if (!s.is_self_dual()) {
    out << "no tree: the system is not closed under complement\n";
    std::cout << out.str();
    return kExitOk;
  }
  AbstractTree t = build_abstract_tree(s);
  out << "graph sets {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    out << "  c" << v << " [label=\"";
    for (std::size_t k = 0; k < t.partition.classes[v].size(); ++k) {
      if (k) out << " ";
      out << s[t.partition.classes[v][k]].to_string();
    }
    out << "\"];\n";
  }
  for (const auto& e : t.edges) {
    out << "  c" << e.u << " -- c" << e.v << " [label=\""
        << s[e.set].to_string() << "\"];\n";
  }
  out << "}\n";
  std::cout << out.str();
  return kExitOk;
}

int run_oracle_cmd(const std::string& source, std::size_t kmax,
                   const WindowArgs& args, bool timing) {
  GraphPtr g = load_graph(source);
  OracleReport r = run_oracle(g, kmax, args.window());
  std::cout << r.text(timing);
  return r.all_agree() ? kExitOk : kExitInvariant;
}

int run_generate(const std::string& spec) {
  std::cout << write_graph(*generate(spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thin cuts, nested selections and structure trees of ended "
               "graphs"};
  app.require_subcommand(1);
  std::size_t threads = 1;
  app.add_option("--threads,-j", threads, "worker threads for enumeration")
      ->capture_default_str();

  std::string source;
  std::size_t kmax = 2;
  WindowArgs wargs;
  std::string automorphisms;
  bool timing = false;

  auto* analyze_cmd =
      app.add_subcommand("analyze", "report k0, thin cuts, degrees and Ĉ′");
  analyze_cmd->add_option("graph", source, "graph file, '-', or gen:SPEC");
  analyze_cmd->add_option("--kmax,-k", kmax, "largest boundary enumerated")
      ->capture_default_str();
  add_window_options(analyze_cmd, wargs);

  auto* tree_cmd = app.add_subcommand("tree", "structure tree in DOT");
  tree_cmd->add_option("graph", source, "graph file, '-', or gen:SPEC");
  tree_cmd->add_option("--automorphisms,-a", automorphisms,
                       "automorphism file; reports invariance");
  add_window_options(tree_cmd, wargs);

  auto* sets_cmd =
      app.add_subcommand("sets", "bases, classes and tree of a set system");
  sets_cmd->add_option("system", source, "set-system file or '-'");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "compare against brute force");
  oracle_cmd->add_option("graph", source, "graph file, '-', or gen:SPEC");
  oracle_cmd->add_option("--kmax,-k", kmax, "largest boundary enumerated")
      ->capture_default_str();
  oracle_cmd->add_flag("--timing", timing, "append wall-clock time");
  add_window_options(oracle_cmd, wargs);

  std::string spec;
  auto* generate_cmd = app.add_subcommand("generate", "emit a graph file");
  generate_cmd->add_option("spec", spec, "e.g. star3, ladder(2), line")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  wargs.threads = threads;

  try {
    if (*analyze_cmd) return run_analyze(source, kmax, wargs);
    if (*tree_cmd) return run_tree(source, wargs, automorphisms);
    if (*sets_cmd) return run_sets(source);
    if (*oracle_cmd) return run_oracle_cmd(source, kmax, wargs, timing);
    if (*generate_cmd) return run_generate(spec);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (is_retryable(e.code())) return kExitRetry;
    if (is_invariant_violation(e.code())) return kExitInvariant;
    return kExitUsage;
  }
  return kExitUsage;
}
