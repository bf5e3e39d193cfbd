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

// Randomized and exhaustive properties of cuts, degrees and structure
// trees over the generator families.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "endtree/endtree.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace endtree {
namespace {

using ::endtree::testing::multi_ended_specs;

// Random side assignment on a component window.
VertexSet random_set(const GraphPtr& g, std::size_t depth,
                     std::mt19937_64& rng) {
  WindowGraph w = expand_component_window(*g, 0, depth);
  std::vector<Side> sides(w.vertices.size());
  for (auto& s : sides) s = rng() & 1 ? Side::kIn : Side::kOut;
  return VertexSet::from_window(g, 0, w, sides);
}

std::vector<VertexRef> probe_vertices(const GraphPtr& g, std::size_t depth) {
  WindowGraph w = expand_component_window(*g, 0, depth);
  std::vector<VertexRef> out = w.vertices;
  // A few levels past the window stand in for the tails.
  for (std::size_t e : g->component(0).ends) {
    for (std::size_t a = 0; a < g->end(e).segment.vertices.size(); ++a) {
      out.push_back(VertexRef::segment(e, depth + 3, a));
    }
  }
  return out;
}

class GraphPropertyTest : public ::testing::TestWithParam<std::string> {
 protected:
  GraphPtr g_ = generate(GetParam());
};

TEST_P(GraphPropertyTest, SetAlgebraIsPointwise) {
  std::mt19937_64 rng(std::hash<std::string>{}(GetParam()));
  const auto probes = probe_vertices(g_, 5);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet a = random_set(g_, 1 + trial % 4, rng);
    VertexSet b = random_set(g_, 1 + (trial / 4) % 4, rng);
    VertexSet ab = meet(a, b);
    VertexSet a_or_b = join(a, b);
    VertexSet ac = complement(a);
    for (const VertexRef& v : probes) {
      const bool in_a = a.side_of(v) == Side::kIn;
      const bool in_b = b.side_of(v) == Side::kIn;
      ASSERT_EQ(ab.side_of(v) == Side::kIn, in_a && in_b);
      ASSERT_EQ(a_or_b.side_of(v) == Side::kIn, in_a || in_b);
      ASSERT_EQ(ac.side_of(v) == Side::kIn, !in_a);
    }
    EXPECT_EQ(complement(ab), join(ac, complement(b)));
    EXPECT_EQ(complement(a_or_b), meet(ac, complement(b)));
    EXPECT_EQ(complement(ac), a);
    EXPECT_EQ(meet(a, b), meet(b, a));
    EXPECT_EQ(parse_vertex_set(g_, 0, a.encoding()), a);
  }
}

TEST_P(GraphPropertyTest, ComplementKeepsTheBoundary) {
  std::mt19937_64 rng(7 + std::hash<std::string>{}(GetParam()));
  std::size_t cuts = 0;
  for (int trial = 0; trial < 300; ++trial) {
    VertexSet a = random_set(g_, 1 + trial % 4, rng);
    auto boundary = edge_boundary(a);
    auto other = edge_boundary(complement(a));
    std::sort(boundary.begin(), boundary.end());
    std::sort(other.begin(), other.end());
    EXPECT_EQ(boundary, other);
    if (auto c = Cut::from(a)) {
      ++cuts;
      EXPECT_TRUE(c->vertices().is_infinite());
      EXPECT_TRUE(complement(*c).vertices().is_infinite());
      EXPECT_EQ(boundary_size(*c), boundary_size(complement(*c)));
    }
  }
  EXPECT_GT(cuts, 0u);
}

TEST_P(GraphPropertyTest, NeatIffMinimalEdgeCut) {
  for (const Cut& c : enumerate_cuts(g_, 3, {3, 1})) {
    EXPECT_EQ(is_neat(c), is_minimal_edge_cut(c)) << c.encoding();
  }
}

TEST_P(GraphPropertyTest, SideComponentBound) {
  const std::size_t k0 = compute_k0(g_, {4, 2}).at(0);
  for (const Cut& c : enumerate_cuts(g_, 3, {3, 1})) {
    const std::size_t k = boundary_size(c);
    for (Side side : {Side::kIn, Side::kOut}) {
      std::size_t finite = 0;
      std::size_t infinite = 0;
      for (const auto& comp : side_components(c, side)) {
        (comp.infinite ? infinite : finite) += 1;
      }
      EXPECT_LT(finite, k) << c.encoding();
      EXPECT_GE(infinite, 1u) << c.encoding();
      EXPECT_LE(infinite * k0, k - finite) << c.encoding();
    }
  }
}

TEST_P(GraphPropertyTest, CutsAreClosedUnderComplement) {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<Cut> cuts = enumerate_cuts(g_, k, {3, 1});
    std::set<Cut> all(cuts.begin(), cuts.end());
    for (const Cut& c : cuts) EXPECT_TRUE(all.count(complement(c)));
  }
}

TEST_P(GraphPropertyTest, ThinCutsThroughACoreEdgeAreWindowStable) {
  // Shallow thin cuts through each core or attachment edge, counted at two
  // depths.
  auto count = [&](const Window& w) {
    std::map<EdgeRef, std::size_t> out;
    for (const Cut& c : thin_cuts(g_, w)) {
      if (c.depth() > 1) continue;
      for (const EdgeRef& e : edge_boundary(c)) {
        if (e.kind == EdgeRef::Kind::kCore ||
            e.kind == EdgeRef::Kind::kAttach) {
          ++out[e];
        }
      }
    }
    return out;
  };
  EXPECT_EQ(count({4, 2}), count({6, 3}));
}

TEST_P(GraphPropertyTest, DegreeSubadditivity) {
  const Window w{5, 2};
  Analysis a = analyze(g_, w);
  const auto& comp = a.components[0];
  NonNestednessIndex index(comp.thin);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < comp.thin.size(); ++i) {
    if (!comp.interior[i]) continue;
    for (std::size_t j = i + 1; j < comp.thin.size(); ++j) {
      if (!comp.interior[j]) continue;
      const Cut& x = comp.thin[i];
      const Cut& y = comp.thin[j];
      if (x == complement(y)) continue;
      CornerDiagnostics d;
      try {
        d = corner_diagnostics(x, y, comp.k0);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kPreconditionViolated) << e.what();
        continue;
      }
      if (!d.corner || !d.opposite || !w.is_interior(*d.corner) ||
          !w.is_interior(*d.opposite) || !index.find(*d.corner) ||
          !index.find(*d.opposite)) {
        continue;
      }
      DegreeInequality r = degree_inequality(index, x, y, comp.k0);
      EXPECT_TRUE(r.holds) << x.encoding() << " / " << y.encoding();
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST_P(GraphPropertyTest, SelectionIsNestedAndComplementClosed) {
  Analysis a = analyze(g_, {5, 2});
  std::vector<Cut> sel = a.components[0].selected_cuts();
  std::set<Cut> all(sel.begin(), sel.end());
  for (const Cut& x : sel) {
    EXPECT_TRUE(all.count(complement(x)));
    for (const Cut& y : sel) EXPECT_TRUE(nested(x, y));
  }
}

INSTANTIATE_TEST_SUITE_P(Families, GraphPropertyTest,
                         ::testing::ValuesIn(multi_ended_specs()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) {
                               ch = '_';
                             }
                           }
                           return s;
                         });

class TreePropertyTest : public ::testing::TestWithParam<std::string> {
 protected:
  void SetUp() override {
    spec_ = parse_generator_spec(GetParam());
    g_ = generate(spec_);
    analysis_ = analyze(g_, w_);
    tree_ = build_structure_forest(analysis_).at(0);
  }

  GeneratorSpec spec_;
  GraphPtr g_;
  Window w_{5, 2};
  Analysis analysis_;
  StructureTree tree_;
};

TEST_P(TreePropertyTest, NoLoopsOrMultiEdges) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : tree_.edges) {
    EXPECT_NE(e.u, e.v);
    EXPECT_TRUE(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
  }
  TreeEdges edges;
  for (const auto& e : tree_.edges) edges.emplace_back(e.u, e.v);
  EXPECT_NO_THROW(canonical_form(tree_.vertices.size(), edges));
}

TEST_P(TreePropertyTest, ClassesAreOrthogonalBases) {
  std::vector<Cut> all;
  for (const auto& v : tree_.vertices) {
    all.insert(all.end(), v.members.begin(), v.members.end());
  }
  SetSystem<Cut> system(all);
  for (const auto& v : tree_.vertices) {
    std::vector<std::size_t> idx;
    for (const Cut& c : v.members) idx.push_back(system.index_of(c));
    for (std::size_t x : idx) {
      for (std::size_t y : idx) {
        if (x != y) {
          EXPECT_TRUE(orthogonal(system[x], system[y]));
        }
      }
    }
    EXPECT_TRUE(system.is_basis(idx)) << v.id;
  }
}

TEST_P(TreePropertyTest, InteriorPathsIncrease) {
  std::vector<Cut> all;
  for (const auto& v : tree_.vertices) {
    if (!v.interior) continue;
    all.insert(all.end(), v.members.begin(), v.members.end());
  }
  for (const auto& v : tree_.vertices) {
    if (v.interior) continue;
    all.insert(all.end(), v.members.begin(), v.members.end());
  }
  SetSystem<Cut> system(all);
  std::size_t paths = 0;
  std::vector<std::size_t> seq;
  std::function<void()> extend = [&] {
    if (seq.size() >= 2) {
      EXPECT_EQ(check_path_representation(system,
                                          std::span<const std::size_t>(seq)),
                PathKind::kStrictlyIncreasing);
      ++paths;
    }
    if (seq.size() == 6) return;
    const std::size_t last = seq.back();
    const std::size_t last_c = *system.complement_index(last);
    for (std::size_t c : system.max_orthogonal_class(last)) {
      const std::size_t next = *system.complement_index(c);
      if (next == last_c) continue;
      if (!w_.is_interior(system[next])) continue;
      seq.push_back(next);
      extend();
      seq.pop_back();
    }
  };
  for (std::size_t a = 0; a < system.size(); ++a) {
    if (!w_.is_interior(system[a])) continue;
    seq = {a};
    extend();
  }
  EXPECT_GT(paths, 0u);
}

TEST_P(TreePropertyTest, AutomorphismsCommuteWithTheStructure) {
  std::vector<Automorphism> gens = symmetry_generators(spec_, g_);
  ASSERT_FALSE(gens.empty());
  for (const Automorphism& gamma : gens) {
    for (const auto& v : tree_.vertices) {
      for (const Cut& a : v.members) {
        const Cut image = apply_automorphism(gamma, a);
        EXPECT_EQ(apply_automorphism(gamma, complement(a)), complement(image));
        EXPECT_EQ(boundary_size(image), boundary_size(a));
      }
    }
    auto map = induced_tree_map(tree_, gamma);
    ASSERT_TRUE(map.has_value());
    // γ[A] = [γA] for interior classes, and interior edges map to edges.
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : tree_.edges) edges.emplace(e.u, e.v);
    for (const auto& e : tree_.edges) {
      if (!tree_.vertices[e.u].interior || !tree_.vertices[e.v].interior) {
        continue;
      }
      const std::size_t a = (*map)[e.u];
      const std::size_t b = (*map)[e.v];
      EXPECT_TRUE(edges.count({a, b}) || edges.count({b, a}));
      EXPECT_TRUE(tree_.vertices[a].interior && tree_.vertices[b].interior);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Symmetric, TreePropertyTest,
                         ::testing::Values("star3", "star4", "line", "ladder2",
                                           "crossed_core4", "crossed_core3"));

}  // namespace
}  // namespace endtree
