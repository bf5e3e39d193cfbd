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

// Example families of ended graphs and finite trees. Random families take an
// explicit seed.

#ifndef ENDTREE_GENERATORS_HPP_
#define ENDTREE_GENERATORS_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "endtree/ended_graph.hpp"
#include "endtree/error.hpp"
#include "endtree/nested_sets.hpp"
#include "endtree/structure_tree.hpp"
#include "endtree/tree_isomorphism.hpp"

namespace endtree {

namespace detail {

inline SegmentTemplate ray_segment() {
  return SegmentTemplate{{"x"}, {}, {{0, 0}}};
}

// Width-w strip: a path t0..t(w-1) on every level, straight cross edges.
inline SegmentTemplate strip_segment(std::size_t w) {
  SegmentTemplate s;
  for (std::size_t a = 0; a < w; ++a) {
    s.vertices.push_back("t" + std::to_string(a));
    s.cross_edges.emplace_back(a, a);
    if (a + 1 < w) s.internal_edges.emplace_back(a, a + 1);
  }
  return s;
}

inline std::vector<std::string> numbered(const std::string& prefix,
                                         std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace detail

// One core vertex c with n rays e0..e(n-1).
inline GraphPtr make_star(std::size_t n) {
  std::vector<End> ends;
  for (std::size_t i = 0; i < n; ++i) {
    ends.push_back({"e" + std::to_string(i), detail::ray_segment(), {{0, 0}}});
  }
  return EndedGraph::create("star" + std::to_string(n), {"c"}, {},
                            std::move(ends));
}

// The bi-infinite path: core edge u-v with a ray L at u and a ray R at v.
inline GraphPtr make_line() {
  return EndedGraph::create(
      "line", {"u", "v"}, {{0, 1}},
      {{"L", detail::ray_segment(), {{0, 0}}},
       {"R", detail::ray_segment(), {{1, 0}}}});
}

inline GraphPtr make_single_ray() {
  return EndedGraph::create("single_ray", {"r"}, {},
                            {{"e0", detail::ray_segment(), {{0, 0}}}});
}

// Bi-infinite ladder of width w: a core rung c0..c(w-1) and strips A, B.
inline GraphPtr make_ladder(std::size_t w) {
  if (w == 0) throw Error(ErrorCode::kInvalidArgument, "ladder width 0");
  std::vector<IndexPair> rung;
  std::vector<IndexPair> attach;
  for (std::size_t j = 0; j < w; ++j) {
    if (j + 1 < w) rung.emplace_back(j, j + 1);
    attach.emplace_back(j, j);
  }
  return EndedGraph::create(
      "ladder" + std::to_string(w), detail::numbered("c", w), rung,
      {{"A", detail::strip_segment(w), attach},
       {"B", detail::strip_segment(w), attach}});
}

// Core cycle s0..s(n-1); each s_i carries a width-w strip X_i whose first
// level is fully attached to s_i.
inline GraphPtr make_crossed_core(std::size_t n, std::size_t w = 2) {
  if (n < 3 || w == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "crossed_core needs n >= 3 and w >= 1");
  }
  std::vector<IndexPair> cycle;
  for (std::size_t i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
  std::vector<End> ends;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IndexPair> attach;
    for (std::size_t a = 0; a < w; ++a) attach.emplace_back(i, a);
    ends.push_back(
        {"X" + std::to_string(i), detail::strip_segment(w), std::move(attach)});
  }
  std::string name = "crossed_core" + std::to_string(n);
  if (w != 2) name += "_w" + std::to_string(w);
  return EndedGraph::create(name, detail::numbered("s", n), cycle,
                            std::move(ends));
}

// A random connected core on 3..5 vertices carrying `ends` ends, each a ray
// or a width-2 strip.
inline GraphPtr make_random_core(std::uint64_t seed, std::size_t ends) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  const std::size_t n = 3 + pick(3);
  std::vector<IndexPair> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(pick(v), v);
  for (std::size_t extra = pick(2); extra > 0; --extra) {
    std::size_t a = pick(n);
    std::size_t b = pick(n);
    IndexPair e{std::min(a, b), std::max(a, b)};
    if (a != b && std::find(edges.begin(), edges.end(), e) == edges.end() &&
        std::find(edges.begin(), edges.end(), IndexPair{e.second, e.first}) ==
            edges.end()) {
      edges.push_back(e);
    }
  }
  std::vector<End> out;
  for (std::size_t i = 0; i < ends; ++i) {
    std::string name = "E" + std::to_string(i);
    if (pick(2) == 0) {
      out.push_back({name, detail::ray_segment(), {{pick(n), 0}}});
    } else {
      std::size_t u = pick(n);
      std::size_t v = pick(n);
      std::vector<IndexPair> attach{{u, 0}, {v, 1}};
      out.push_back({name, detail::strip_segment(2), attach});
    }
  }
  return EndedGraph::create("random_core_s" + std::to_string(seed) + "_e" +
                                std::to_string(ends),
                            detail::numbered("k", n), edges, std::move(out));
}

// ---------------------------------------------------------------------------
// Finite trees and their edge-component set systems.

struct FiniteTree {
  std::size_t n = 0;
  TreeEdges edges;
};

// Random labelled tree: vertex i > 0 hangs off a uniform earlier vertex,
// then labels are shuffled.
inline FiniteTree make_finite_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty tree");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  FiniteTree t{n, {}};
  for (std::size_t v = 1; v < n; ++v) {
    std::size_t p = static_cast<std::size_t>(rng() % v);
    t.edges.emplace_back(label[p], label[v]);
  }
  return t;
}

// For each edge e, the vertex sets of the two components of T - e.
inline ParsedSetSystem edge_component_system(const FiniteTree& t) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t.n; ++i) names.push_back("x" + std::to_string(i));
  ParsedSetSystem out;
  out.universe = Universe::create(names);
  std::vector<std::vector<std::size_t>> adj(t.n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto [a, b] : t.edges) {
    std::vector<char> seen(t.n, 0);
    std::vector<std::size_t> stack{a};
    seen[a] = 1;
    seen[b] = 1;
    std::vector<std::string> side;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      side.push_back(names[v]);
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    GroundSet s = GroundSet::from_names(out.universe, side);
    out.sets.push_back(s);
    out.sets.push_back(complement(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spec strings: `star3`, `star(3)`, `star:3`, `line`, `single_ray`,
// `ladder2`, `crossed_core4`, `crossed_core(4,3)`, `random_core(7,3)`.

struct GeneratorSpec {
  std::string family;
  std::vector<std::uint64_t> params;
};

inline GeneratorSpec parse_generator_spec(const std::string& text) {
  GeneratorSpec spec;
  std::size_t i = 0;
  while (i < text.size() &&
         (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
    spec.family += text[i++];
  }
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::uint64_t v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      }
      spec.params.push_back(v);
    } else if (text[i] == '(' || text[i] == ')' || text[i] == ',' ||
               text[i] == ':' || text[i] == ' ') {
      ++i;
    } else {
      throw Error(ErrorCode::kParse, "bad generator spec: " + text);
    }
  }
  if (spec.family.empty()) {
    throw Error(ErrorCode::kParse, "bad generator spec: " + text);
  }
  return spec;
}

inline GraphPtr generate(const GeneratorSpec& spec) {
  auto param = [&](std::size_t i, std::uint64_t fallback) {
    return i < spec.params.size() ? spec.params[i] : fallback;
  };
  auto arity = [&](std::size_t max) {
    if (spec.params.size() > max) {
      throw Error(ErrorCode::kParse,
                  "too many parameters for " + spec.family);
    }
  };
  if (spec.family == "star") {
    arity(1);
    return make_star(param(0, 3));
  }
  if (spec.family == "line") {
    arity(0);
    return make_line();
  }
  if (spec.family == "single_ray") {
    arity(0);
    return make_single_ray();
  }
  if (spec.family == "ladder") {
    arity(1);
    return make_ladder(param(0, 2));
  }
  if (spec.family == "crossed_core") {
    arity(2);
    return make_crossed_core(param(0, 4), param(1, 2));
  }
  if (spec.family == "random_core") {
    arity(2);
    return make_random_core(param(0, 0), param(1, 2));
  }
  throw Error(ErrorCode::kParse, "unknown generator family " + spec.family);
}

inline GraphPtr generate(const std::string& text) {
  return generate(parse_generator_spec(text));
}

// ---------------------------------------------------------------------------
// Symmetries of the families above.

// e_i -> e_(i+1).
inline Automorphism star_rotation(const GraphPtr& g) {
  const std::size_t n = g->ends().size();
  std::vector<Automorphism::EndMap> ends;
  for (std::size_t i = 0; i < n; ++i) ends.push_back({(i + 1) % n, {0}});
  return Automorphism::create(g, {0}, std::move(ends), "rot");
}

// s_i -> s_(i+1), X_i -> X_(i+1).
inline Automorphism crossed_core_rotation(const GraphPtr& g) {
  const std::size_t n = g->ends().size();
  const std::size_t w = g->end(0).segment.vertices.size();
  std::vector<std::size_t> core;
  std::vector<Automorphism::EndMap> ends;
  std::vector<std::size_t> same(w);
  for (std::size_t a = 0; a < w; ++a) same[a] = a;
  for (std::size_t i = 0; i < n; ++i) {
    core.push_back((i + 1) % n);
    ends.push_back({(i + 1) % n, same});
  }
  return Automorphism::create(g, std::move(core), std::move(ends), "rot");
}

// u <-> v, L <-> R.
inline Automorphism line_reflection(const GraphPtr& g) {
  return Automorphism::create(g, {1, 0}, {{1, {0}}, {0, {0}}}, "flip");
}

// A <-> B with the rung fixed, and the rung reversed on both strips.
inline std::vector<Automorphism> ladder_symmetries(const GraphPtr& g) {
  const std::size_t w = g->core_vertices().size();
  std::vector<std::size_t> id(w);
  std::vector<std::size_t> rev(w);
  for (std::size_t j = 0; j < w; ++j) {
    id[j] = j;
    rev[j] = w - 1 - j;
  }
  return {Automorphism::create(g, id, {{1, id}, {0, id}}, "swap"),
          Automorphism::create(g, rev, {{0, rev}, {1, rev}}, "mirror")};
}

// Known generators for a generated graph; empty for random families.
inline std::vector<Automorphism> symmetry_generators(const GeneratorSpec& spec,
                                                     const GraphPtr& g) {
  if (spec.family == "star") return {star_rotation(g)};
  if (spec.family == "crossed_core") return {crossed_core_rotation(g)};
  if (spec.family == "line") return {line_reflection(g)};
  if (spec.family == "ladder") return ladder_symmetries(g);
  return {};
}

}  // namespace endtree

#endif  // ENDTREE_GENERATORS_HPP_
