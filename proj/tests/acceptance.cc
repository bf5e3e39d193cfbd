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

// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "endtree/endtree.hpp"
#include "set_properties.hpp"
#include "test_util.hpp"

namespace {

using namespace endtree;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kTreeRecoverySeconds = 10.0;
constexpr double kSetPropertySeconds = 60.0;
constexpr std::size_t kRandomTrees = 100;
constexpr std::size_t kMaxTreeSize = 12;
constexpr std::size_t kOracleKMax = 3;
constexpr std::size_t kWitnessWordLength = 2;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::vector<std::string> instances() {
  std::vector<std::string> out = testing::multi_ended_specs();
  for (const char* extra : {"star5", "ladder3", "crossed_core5",
                            "crossed_core(4,1)"}) {
    out.push_back(extra);
  }
  return out;
}

Outcome tree_recovery() {
  const auto start = Clock::now();
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < kRandomTrees; ++seed) {
    const std::size_t n = 2 + seed % (kMaxTreeSize - 1);
    FiniteTree t = make_finite_tree(n, seed);
    AbstractTree built = build_abstract_tree(edge_component_system(t).system());
    TreeEdges edges;
    for (const auto& e : built.edges) edges.emplace_back(e.u, e.v);
    if (trees_isomorphic(built.vertex_count(), edges, t.n, t.edges)) ++ok;
  }
  const double secs = seconds_since(start);
  return {ok == kRandomTrees && secs < kTreeRecoverySeconds,
          std::to_string(ok) + "/" + std::to_string(kRandomTrees) +
              " recovered in " + fmt_seconds(secs)};
}

Outcome k0_values() {
  std::vector<std::pair<std::string, std::size_t>> want = {
      {"star2", 1}, {"star3", 1}, {"star4", 1}, {"star5", 1},
      {"ladder2", 2}, {"crossed_core4", 2}};
  std::string bad;
  for (const auto& [spec, k0] : want) {
    for (std::size_t d : {3, 4, 5}) {
      auto got = compute_k0(generate(spec), Window::with_default_margin(d));
      if (got != std::vector<std::size_t>{k0}) {
        bad += " " + spec + "@D" + std::to_string(d);
      }
    }
  }
  // Brute-force k0 where the window is small enough.
  for (const auto& [spec, k0] : want) {
    try {
      auto o = oracle_component(generate(spec), 0, {3, 1});
      if (o.k0 != k0) bad += " oracle:" + spec;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) bad += " oracle:" + spec;
    }
  }
  bool single_ray_ok = false;
  try {
    compute_k0(make_single_ray(), {4, 2});
  } catch (const Error& e) {
    single_ray_ok = e.code() == ErrorCode::kNotMultiEnded;
  }
  if (!single_ray_ok) bad += " single_ray";
  return {bad.empty(), bad.empty() ? "6 families at D=3,4,5; single_ray "
                                     "NotMultiEnded"
                                   : "mismatch:" + bad};
}

Outcome thin_is_neat() {
  std::size_t cuts = 0;
  std::size_t bad = 0;
  for (const auto& spec : instances()) {
    for (const Cut& c : thin_cuts(generate(spec), {5, 2})) {
      ++cuts;
      if (side_components(c, Side::kIn).size() != 1 ||
          side_components(c, Side::kOut).size() != 1) {
        ++bad;
      }
    }
  }
  return {bad == 0 && cuts > 0, std::to_string(cuts) + " thin cuts, " +
                                    std::to_string(bad) + " not neat"};
}

Outcome selection_nested() {
  std::size_t pairs = 0;
  std::size_t bad = 0;
  std::string errors;
  for (const auto& spec : instances()) {
    try {
      Analysis a = analyze(generate(spec), {5, 2});
      for (const auto& comp : a.components) {
        auto sel = comp.selected_cuts();
        for (const Cut& x : sel) {
          for (const Cut& y : sel) {
            ++pairs;
            if (!nested(x, y)) ++bad;
          }
        }
      }
    } catch (const Error& e) {
      errors += " " + spec + ":" + std::string(to_string(e.code()));
    }
  }
  return {bad == 0 && errors.empty() && pairs > 0,
          std::to_string(pairs) + " pairs over " +
              std::to_string(instances().size()) + " instances, " +
              std::to_string(bad) + " non-nested" + errors};
}

Outcome tree_axioms() {
  std::string bad;
  std::size_t trees = 0;
  auto check = [&](const std::string& spec, const Window& w,
                   bool need_interior) {
    std::vector<StructureTree> forest;
    try {
      forest = build_structure_forest(analyze(generate(spec), w));
    } catch (const Error& e) {
      bad += " " + spec + ":" + std::string(to_string(e.code()));
      return;
    }
    for (const auto& t : forest) {
      ++trees;
      std::set<std::pair<std::size_t, std::size_t>> seen;
      TreeEdges edges;
      for (const auto& e : t.edges) {
        if (e.u == e.v) bad += " loop:" + spec;
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) {
          bad += " multi-edge:" + spec;
        }
        edges.emplace_back(e.u, e.v);
      }
      try {
        canonical_form(t.vertices.size(), edges);
        auto [n, inner] = t.interior_subtree();
        if (need_interior && n > 0) canonical_form(n, inner);
      } catch (const Error&) {
        bad += " not-a-tree:" + spec;
      }
    }
  };
  for (const char* spec : {"star3", "line", "ladder2", "crossed_core4"}) {
    check(spec, {6, 3}, true);
  }
  for (const auto& spec : instances()) check(spec, {5, 2}, true);
  return {bad.empty(), std::to_string(trees) + " trees" +
                           (bad.empty() ? ", all axioms hold" : ":" + bad)};
}

struct PairSweep {
  std::size_t applicable = 0;
  std::size_t non_nested = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// Interior thin pairs with infinite opposite corners, run through `fn`.
PairSweep sweep_pairs(const std::string& spec, const Window& w,
                      const std::function<bool(const ComponentAnalysis&,
                                               const NonNestednessIndex&,
                                               const Cut&, const Cut&)>& fn) {
  PairSweep out;
  Analysis a = analyze(generate(spec), w);
  for (const auto& comp : a.components) {
    NonNestednessIndex index(comp.thin);
    for (std::size_t i = 0; i < comp.thin.size(); ++i) {
      if (!comp.interior[i]) continue;
      for (std::size_t j = i + 1; j < comp.thin.size(); ++j) {
        if (!comp.interior[j]) continue;
        const Cut& x = comp.thin[i];
        const Cut& y = comp.thin[j];
        if (x == complement(y)) continue;
        bool ok = false;
        try {
          ok = fn(comp, index, x, y);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kPreconditionViolated) continue;
          ok = false;
        }
        ++out.applicable;
        if (!nested(x, y)) ++out.non_nested;
        if (!ok && out.failures++ == 0) {
          out.first_failure = x.encoding() + " / " + y.encoding();
        }
      }
    }
  }
  return out;
}

constexpr const char* kP = "core=IIOO;X0=>I;X1=>I;X2=>O;X3=>O";
constexpr const char* kQ = "core=OIIO;X0=>O;X1=>I;X2=>I;X3=>O";

Outcome corner_lemma() {
  PairSweep s = sweep_pairs(
      "crossed_core4", {4, 2},
      [](const ComponentAnalysis& comp, const NonNestednessIndex&,
         const Cut& x, const Cut& y) {
        CornerDiagnostics d = corner_diagnostics(x, y, comp.k0);
        return d.e_b + d.e_b_c + d.d_ab + d.d_ab_c == d.boundary_a &&
               d.e_a + d.e_a_c + d.d_ab + d.d_ab_c == d.boundary_b &&
               d.boundary_a == d.boundary_b && d.d_ab_c == 0 &&
               d.corner_boundary == comp.k0 &&
               d.opposite_boundary == comp.k0;
      });
  GraphPtr g = make_crossed_core(4);
  const Cut p = testing::cut_from_text(g, kP);
  const Cut q = testing::cut_from_text(g, kQ);
  CornerDiagnostics pq = corner_diagnostics(p, q, 2);
  const bool pq_ok = !nested(p, q) && pq.d_ab_c == 0 && pq.both_thin;
  return {s.failures == 0 && s.non_nested >= 1 && pq_ok,
          std::to_string(s.applicable) + " pairs, " +
              std::to_string(s.non_nested) + " non-nested, " +
              std::to_string(s.failures) + " failures" +
              (s.failures ? " first=" + s.first_failure : "") +
              (pq_ok ? "; (P,Q) exercised" : "; (P,Q) FAILED")};
}

Outcome degree_inequality_all() {
  std::size_t applicable = 0;
  std::size_t failures = 0;
  std::string first;
  for (const auto& spec : instances()) {
    PairSweep s = sweep_pairs(
        spec, {5, 2},
        [](const ComponentAnalysis& comp, const NonNestednessIndex& index,
           const Cut& x, const Cut& y) {
          if (nested(x, y)) {
            throw Error(ErrorCode::kPreconditionViolated, "nested pair");
          }
          CornerDiagnostics d = corner_diagnostics(x, y, comp.k0);
          if (!d.corner || !d.opposite || !index.find(*d.corner) ||
              !index.find(*d.opposite)) {
            throw Error(ErrorCode::kPreconditionViolated, "corner not thin");
          }
          return degree_inequality(index, x, y, comp.k0).holds;
        });
    applicable += s.applicable;
    failures += s.failures;
    if (first.empty() && s.failures) first = spec + " " + s.first_failure;
  }
  GraphPtr g = make_crossed_core(4);
  NonNestednessIndex index(thin_cuts(g, {4, 2}));
  DegreeInequality pq = degree_inequality(
      index, testing::cut_from_text(g, kP), testing::cut_from_text(g, kQ), 2);
  const bool strict = pq.strict_required &&
                      pq.corner_degrees + 2 <= pq.cut_degrees;
  return {failures == 0 && applicable > 0 && strict,
          std::to_string(applicable) + " non-nested pairs, " +
              std::to_string(failures) + " failures" +
              (first.empty() ? "" : " first=" + first) + "; (P,Q) " +
              std::to_string(pq.corner_degrees) + " <= " +
              std::to_string(pq.cut_degrees) + " - 2"};
}

Outcome oracle_equivalence() {
  std::vector<std::string> specs = instances();
  for (int seed = 10; seed < 30; ++seed) {
    specs.push_back("random_core(" + std::to_string(seed) + "," +
                    std::to_string(2 + seed % 2) + ")");
  }
  std::size_t compared = 0;
  std::size_t bad = 0;
  std::string first;
  for (const auto& spec : specs) {
    GraphPtr g = generate(spec);
    for (std::size_t depth = 1; depth <= 5; ++depth) {
      for (std::size_t k = 1; k <= kOracleKMax; ++k) {
        std::vector<Cut> theirs;
        try {
          theirs = oracle_enumerate(g, k, depth);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kTooLarge) continue;
          throw;
        }
        std::string a;
        std::string b;
        for (const Cut& c : enumerate_cuts(g, k, {depth, 0})) {
          a += std::to_string(c.component()) + ":" + c.encoding() + "\n";
        }
        for (const Cut& c : theirs) {
          b += std::to_string(c.component()) + ":" + c.encoding() + "\n";
        }
        ++compared;
        if (a != b && bad++ == 0) {
          first = spec + " D=" + std::to_string(depth) +
                  " k=" + std::to_string(k);
        }
      }
    }
  }
  return {bad == 0 && compared > 0,
          std::to_string(compared) + " (instance, D, k) listings, " +
              std::to_string(bad) + " differ" +
              (first.empty() ? "" : " first=" + first)};
}

Outcome automorphisms() {
  std::string detail;
  bool pass = true;
  for (const char* spec : {"star3", "crossed_core4"}) {
    GeneratorSpec s = parse_generator_spec(spec);
    GraphPtr g = generate(s);
    Analysis a = analyze(g, {4, 2});
    auto gens = symmetry_generators(s, g);
    const bool inv = check_invariance(a.components[0].selected_cuts(), gens);
    StructureTree t = build_structure_forest(a).at(0);
    bool maps = true;
    for (const auto& gamma : gens) maps = maps && induced_tree_map(t, gamma);
    pass = pass && inv && maps;
    detail += std::string(spec) + " invariant=" + (inv ? "yes" : "no") +
              " tree-maps=" + (maps ? "yes" : "no") + "; ";
  }
  GraphPtr g = make_star(3);
  StructureTree t = build_structure_forest(analyze(g, {4, 2})).at(0);
  std::vector<Automorphism> gens{star_rotation(g)};
  std::size_t interior = 0;
  std::size_t found = 0;
  std::string missing;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (!t.vertices[v].interior) continue;
    ++interior;
    if (fixed_point_witness(t, v, gens, kWitnessWordLength)) {
      ++found;
    } else {
      missing += " " + t.vertices[v].id;
    }
  }
  pass = pass && found == interior;
  detail += "star3 witnesses " + std::to_string(found) + "/" +
            std::to_string(interior) + " interior classes";
  if (!missing.empty()) detail += ", none for" + missing;
  return {pass, detail};
}

Outcome set_properties() {
  const auto start = Clock::now();
  testing::PropertyReport r = testing::run_set_properties();
  const double secs = seconds_since(start);
  std::size_t checks = 0;
  std::string bad;
  for (const auto& p : r.results) {
    checks += p.checked;
    if (p.failures || !p.checked) bad += " [" + p.name + "]";
  }
  return {r.ok() && secs < kSetPropertySeconds,
          std::to_string(r.systems) + " systems, " + std::to_string(checks) +
              " checks in " + fmt_seconds(secs) +
              (bad.empty() ? "" : ", failing:" + bad)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"tree recovery", tree_recovery},
      {"k0 values", k0_values},
      {"thin cuts are neat", thin_is_neat},
      {"selection is nested", selection_nested},
      {"structure tree axioms", tree_axioms},
      {"corner lemma", corner_lemma},
      {"degree inequality", degree_inequality_all},
      {"oracle equivalence", oracle_equivalence},
      {"automorphism suite", automorphisms},
      {"set-system properties", set_properties},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s %s: %s\n", n, o.pass ? "PASS" : "FAIL",
                c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria pass\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
