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

#ifndef ENDTREE_STRUCTURE_TREE_HPP_
#define ENDTREE_STRUCTURE_TREE_HPP_

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "endtree/cut_miner.hpp"
#include "endtree/ended_graph.hpp"
#include "endtree/error.hpp"
#include "endtree/nested_sets.hpp"

namespace endtree {

// Tree on the ∼-classes of a nested, complement-closed list of cuts of one
// component. Vertices are sorted by id, the least member encoding.
struct StructureTree {
  struct Vertex {
    std::string id;
    std::vector<Cut> members;  // sorted
    bool interior = false;     // holds an interior cut
  };
  struct Edge {
    std::size_t u = 0;  // class of `cut`
    std::size_t v = 0;  // class of its complement
    Cut cut;            // the smaller of the complement pair
  };

  GraphPtr graph;
  std::size_t component = 0;
  Window window;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted by (u, v)

  std::optional<std::size_t> vertex_of(const Cut& c) const {
    auto it = class_of.find(c);
    if (it == class_of.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  std::size_t interior_vertex_count() const {
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(),
                      [](const Vertex& v) { return v.interior; }));
  }

  // Edges with both ends interior, as index pairs into the interior-only
  // numbering (interior vertices in id order).
  std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>
  interior_subtree() const {
    std::vector<std::size_t> renum(vertices.size(), vertices.size());
    std::size_t n = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].interior) renum[i] = n++;
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Edge& e : edges) {
      if (vertices[e.u].interior && vertices[e.v].interior) {
        out.emplace_back(renum[e.u], renum[e.v]);
      }
    }
    return {n, out};
  }

  std::map<Cut, std::size_t> class_of;
};

namespace detail {

inline void require_interior_connected(const StructureTree& t) {
  auto [n, edges] = t.interior_subtree();
  if (n == 0) {
    throw Error(ErrorCode::kWindowTooSmall, "no interior class");
  }
  DisjointSets dsu(n);
  for (auto [a, b] : edges) dsu.unite(a, b);
  for (std::size_t i = 1; i < n; ++i) {
    if (dsu.find(i) != dsu.find(0)) {
      throw Error(ErrorCode::kWindowTooSmall,
                  "interior classes of component " +
                      std::to_string(t.component) + " are disconnected");
    }
  }
}

}  // namespace detail

// Builds the tree and checks its axioms: loops, multi-edges and cycles raise
// kInvariantViolation, interior classes that fall apart raise
// kWindowTooSmall.
inline StructureTree build_structure_tree(std::vector<Cut> cuts,
                                          const Window& w) {
  if (cuts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no cuts to build a tree from");
  }
  for (const Cut& c : cuts) {
    if (c.host() != cuts.front().host()) {
      throw Error(ErrorCode::kHostMismatch, "cuts from different graphs");
    }
    if (c.component() != cuts.front().component()) {
      throw Error(ErrorCode::kMixedComponents,
                  "a structure tree covers one component");
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  SetSystem<Cut> system(cuts);
  AbstractTree abstract = build_abstract_tree(system);

  StructureTree tree;
  tree.graph = cuts.front().host();
  tree.component = cuts.front().component();
  tree.window = w;
  // Members are sorted, so the first is the least encoding.
  std::vector<std::size_t> order(abstract.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& classes = abstract.partition.classes;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return system[classes[a].front()].encoding() <
           system[classes[b].front()].encoding();
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  for (std::size_t r = 0; r < order.size(); ++r) {
    StructureTree::Vertex v;
    for (std::size_t m : classes[order[r]]) {
      v.members.push_back(system[m]);
      v.interior = v.interior || w.is_interior(system[m]);
      tree.class_of.emplace(system[m], r);
    }
    std::sort(v.members.begin(), v.members.end(),
              [](const Cut& a, const Cut& b) {
                return a.encoding() < b.encoding();
              });
    v.id = v.members.front().encoding();
    tree.vertices.push_back(std::move(v));
  }
  for (const auto& e : abstract.edges) {
    tree.edges.push_back({rank[e.u], rank[e.v], system[e.set]});
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const StructureTree::Edge& a, const StructureTree::Edge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  detail::require_interior_connected(tree);
  return tree;
}

// One tree per component, on the minimum-degree cuts of the analysis.
inline std::vector<StructureTree> build_structure_forest(
    const Analysis& analysis) {
  std::vector<StructureTree> out;
  for (const auto& comp : analysis.components) {
    out.push_back(build_structure_tree(comp.selected_cuts(), analysis.window));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Level-preserving automorphisms.

class Automorphism {
 public:
  struct EndMap {
    std::size_t target = 0;
    std::vector<std::size_t> segment;  // template vertex bijection
  };

  Automorphism() = default;

  static Automorphism create(GraphPtr host, std::vector<std::size_t> core,
                             std::vector<EndMap> ends, std::string name = "") {
    Automorphism a;
    a.host_ = std::move(host);
    a.core_ = std::move(core);
    a.ends_ = std::move(ends);
    a.name_ = std::move(name);
    a.validate();
    return a;
  }

  static Automorphism identity(GraphPtr host) {
    std::vector<std::size_t> core(host->core_vertices().size());
    for (std::size_t i = 0; i < core.size(); ++i) core[i] = i;
    std::vector<EndMap> ends;
    for (std::size_t e = 0; e < host->ends().size(); ++e) {
      EndMap m{e, {}};
      for (std::size_t a = 0; a < host->end(e).segment.vertices.size(); ++a) {
        m.segment.push_back(a);
      }
      ends.push_back(std::move(m));
    }
    return create(std::move(host), std::move(core), std::move(ends), "id");
  }

  const GraphPtr& host() const { return host_; }
  const std::string& name() const { return name_; }
  const std::vector<std::size_t>& core_map() const { return core_; }
  const std::vector<EndMap>& end_maps() const { return ends_; }

  VertexRef apply(const VertexRef& v) const {
    switch (v.kind) {
      case VertexRef::Kind::kCore: return VertexRef::core(core_[v.index]);
      case VertexRef::Kind::kSegment:
        return VertexRef::segment(ends_[v.end].target, v.level,
                                  ends_[v.end].segment[v.index]);
      case VertexRef::Kind::kTail: return VertexRef::tail(ends_[v.end].target);
    }
    return v;
  }

  // (a * b) applies b first.
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b) {
    if (a.host_ != b.host_) {
      throw Error(ErrorCode::kHostMismatch, "composing across graphs");
    }
    std::vector<std::size_t> core(b.core_.size());
    for (std::size_t i = 0; i < core.size(); ++i) core[i] = a.core_[b.core_[i]];
    std::vector<EndMap> ends(b.ends_.size());
    for (std::size_t e = 0; e < ends.size(); ++e) {
      const EndMap& first = b.ends_[e];
      const EndMap& second = a.ends_[first.target];
      ends[e].target = second.target;
      for (std::size_t s : first.segment) {
        ends[e].segment.push_back(second.segment[s]);
      }
    }
    std::string name = a.name_ + "*" + b.name_;
    return create(a.host_, std::move(core), std::move(ends), std::move(name));
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    if (a.host_ != b.host_ || a.core_ != b.core_ ||
        a.ends_.size() != b.ends_.size()) {
      return false;
    }
    for (std::size_t e = 0; e < a.ends_.size(); ++e) {
      if (a.ends_[e].target != b.ends_[e].target ||
          a.ends_[e].segment != b.ends_[e].segment) {
        return false;
      }
    }
    return true;
  }

 private:
  static void fail(const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, "automorphism: " + msg);
  }

  static bool is_permutation(const std::vector<std::size_t>& p) {
    std::vector<char> hit(p.size(), 0);
    for (std::size_t x : p) {
      if (x >= p.size() || hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  }

  // Checks bijectivity and that every edge of a two-level expansion maps to
  // an edge.
  void validate() const {
    if (!host_) fail("no graph");
    if (core_.size() != host_->core_vertices().size() || !is_permutation(core_)) {
      fail("core map is not a permutation");
    }
    if (ends_.size() != host_->ends().size()) fail("end map has wrong size");
    std::vector<std::size_t> targets;
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      const EndMap& m = ends_[e];
      if (m.target >= ends_.size()) fail("end target out of range");
      targets.push_back(m.target);
      const std::size_t s = host_->end(e).segment.vertices.size();
      if (host_->end(m.target).segment.vertices.size() != s ||
          m.segment.size() != s || !is_permutation(m.segment)) {
        fail("segment map of end " + host_->end(e).name +
             " is not a bijection onto " + host_->end(m.target).name);
      }
    }
    if (!is_permutation(targets)) fail("end map is not a permutation");
    constexpr std::size_t kLevels = 2;
    std::set<std::pair<VertexRef, VertexRef>> edges;
    std::vector<std::pair<VertexRef, VertexRef>> list;
    for (std::size_t c = 0; c < host_->components().size(); ++c) {
      for_each_edge(*host_, c, kLevels, [&](const EdgeRef& ref) {
        auto [x, y] = ref.endpoints();
        // The last cross edges reach level kLevels; keep them whole.
        edges.emplace(std::min(x, y), std::max(x, y));
        list.emplace_back(x, y);
      });
    }
    for (auto [x, y] : list) {
      VertexRef fx = apply(x);
      VertexRef fy = apply(y);
      if (!edges.count({std::min(fx, fy), std::max(fx, fy)})) {
        fail("edge " + describe(*host_, x) + "-" + describe(*host_, y) +
             " is not mapped to an edge");
      }
    }
  }

  GraphPtr host_;
  std::vector<std::size_t> core_;
  std::vector<EndMap> ends_;
  std::string name_;
};

// The image γ·c.
inline Cut apply_automorphism(const Automorphism& g, const Cut& c) {
  if (g.host() != c.host()) {
    throw Error(ErrorCode::kHostMismatch, "automorphism of another graph");
  }
  const EndedGraph& host = *c.host();
  const GraphComponent& src = host.component(c.component());
  const std::size_t target_comp =
      host.component_of_core(g.core_map()[src.core.front()]);
  const GraphComponent& dst = host.component(target_comp);
  std::vector<Side> core(dst.core.size());
  for (std::size_t i = 0; i < src.core.size(); ++i) {
    core[host.local_core(g.core_map()[src.core[i]])] = c.vertices().core()[i];
  }
  std::vector<EndTrace> traces(dst.ends.size());
  for (std::size_t i = 0; i < src.ends.size(); ++i) {
    const auto& m = g.end_maps()[src.ends[i]];
    const EndTrace& from = c.vertices().traces()[i];
    EndTrace& to = traces[host.local_end(m.target)];
    to.tail = from.tail;
    for (const auto& level : from.levels) {
      std::vector<Side> row(level.size());
      for (std::size_t a = 0; a < level.size(); ++a) row[m.segment[a]] = level[a];
      to.levels.push_back(std::move(row));
    }
  }
  return Cut(VertexSet(c.host(), target_comp, std::move(core),
                       std::move(traces)));
}

// True iff each generator maps the set of cuts onto itself.
inline bool check_invariance(const std::vector<Cut>& cuts,
                             const std::vector<Automorphism>& generators) {
  std::set<Cut> all(cuts.begin(), cuts.end());
  for (const Automorphism& g : generators) {
    for (const Cut& c : all) {
      if (!all.count(apply_automorphism(g, c))) return false;
    }
  }
  return true;
}

// Vertex map induced on the tree, or nullopt when γ does not map classes
// onto classes and edges onto edges.
inline std::optional<std::vector<std::size_t>> induced_tree_map(
    const StructureTree& tree, const Automorphism& g) {
  std::vector<std::size_t> map(tree.vertices.size());
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    const auto& members = tree.vertices[v].members;
    std::vector<Cut> image;
    for (const Cut& c : members) image.push_back(apply_automorphism(g, c));
    auto target = tree.vertex_of(image.front());
    if (!target) return std::nullopt;
    std::vector<Cut> want = tree.vertices[*target].members;
    std::sort(image.begin(), image.end());
    std::sort(want.begin(), want.end());
    if (image != want) return std::nullopt;
    map[v] = *target;
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : tree.edges) edges.emplace(e.u, e.v);
  for (const auto& e : tree.edges) {
    std::size_t a = map[e.u];
    std::size_t b = map[e.v];
    if (!edges.count({a, b}) && !edges.count({b, a})) return std::nullopt;
  }
  std::vector<std::size_t> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }
  return map;
}

struct Witness {
  std::vector<std::size_t> word;  // generator indices, applied last first
  Automorphism element;
  Cut cut;                        // A in the class with γA ≠ A, γA ∩ A ≠ ∅
};

// Searches words of length 1..max_length over the generators for γ moving
// some member A of class v to a set γA ≠ A that meets A.
inline std::optional<Witness> fixed_point_witness(
    const StructureTree& tree, std::size_t v,
    const std::vector<Automorphism>& generators, std::size_t max_length) {
  if (v >= tree.vertices.size() || generators.empty()) return std::nullopt;
  std::vector<std::pair<std::vector<std::size_t>, Automorphism>> frontier;
  frontier.emplace_back(std::vector<std::size_t>{},
                        Automorphism::identity(tree.graph));
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::pair<std::vector<std::size_t>, Automorphism>> next;
    for (const auto& [word, element] : frontier) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        std::vector<std::size_t> w = word;
        w.push_back(i);
        Automorphism g = generators[i] * element;
        for (const Cut& a : tree.vertices[v].members) {
          Cut image = apply_automorphism(g, a);
          if (image.component() != a.component()) continue;
          if (!(image == a) && !is_empty(meet(image, a))) {
            return Witness{std::move(w), std::move(g), a};
          }
        }
        next.emplace_back(std::move(w), std::move(g));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// Text format: optional `automorphism NAME` headers, then
//   perm_core v->w ...
//   perm_end E->F with a->b ...
// Unlisted core vertices and ends are fixed.
inline std::vector<Automorphism> parse_automorphisms(const GraphPtr& g,
                                                     std::istream& in) {
  struct Pending {
    std::string name;
    std::vector<std::size_t> core;
    std::vector<Automorphism::EndMap> ends;
  };
  auto fresh = [&](std::string name) {
    Automorphism id = Automorphism::identity(g);
    return Pending{std::move(name), id.core_map(), id.end_maps()};
  };
  auto parse_fail = [](std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line) + ": " + msg);
  };
  auto split_arrow = [&](const std::string& tok, std::size_t line) {
    auto p = tok.find("->");
    if (p == std::string::npos) parse_fail(line, "expected a->b, got " + tok);
    return std::pair(tok.substr(0, p), tok.substr(p + 2));
  };
  std::vector<Automorphism> out;
  std::optional<Pending> cur;
  bool touched = false;
  auto flush = [&]() {
    if (cur && touched) {
      out.push_back(Automorphism::create(g, cur->core, cur->ends, cur->name));
    }
  };
  std::string text;
  std::size_t lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (auto h = text.find('#'); h != std::string::npos) text.resize(h);
    std::istringstream ls(text);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "automorphism") {
      flush();
      std::string name;
      ls >> name;
      cur = fresh(name.empty() ? "g" + std::to_string(out.size()) : name);
      touched = true;
      continue;
    }
    if (!cur) {
      cur = fresh("g" + std::to_string(out.size()));
      touched = true;
    }
    if (kw == "perm_core") {
      std::string tok;
      while (ls >> tok) {
        auto [a, b] = split_arrow(tok, lineno);
        auto u = g->find_core(a);
        auto v = g->find_core(b);
        if (!u || !v) parse_fail(lineno, "unknown core vertex in " + tok);
        cur->core[*u] = *v;
      }
    } else if (kw == "perm_end") {
      std::string tok;
      std::string with;
      if (!(ls >> tok)) parse_fail(lineno, "perm_end needs E->F");
      auto [a, b] = split_arrow(tok, lineno);
      auto e = g->find_end(a);
      auto f = g->find_end(b);
      if (!e || !f) parse_fail(lineno, "unknown end in " + tok);
      auto& m = cur->ends[*e];
      m.target = *f;
      if (ls >> with) {
        if (with != "with") parse_fail(lineno, "expected 'with'");
        const auto& from = g->end(*e).segment.vertices;
        const auto& to = g->end(*f).segment.vertices;
        while (ls >> tok) {
          auto [x, y] = split_arrow(tok, lineno);
          auto ix = std::find(from.begin(), from.end(), x);
          auto iy = std::find(to.begin(), to.end(), y);
          if (ix == from.end() || iy == to.end()) {
            parse_fail(lineno, "unknown segment vertex in " + tok);
          }
          m.segment[ix - from.begin()] = static_cast<std::size_t>(iy - to.begin());
        }
      }
    } else {
      parse_fail(lineno, "unknown keyword " + kw);
    }
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// DOT output.

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

inline std::string emit_dot(const StructureTree& tree) {
  std::ostringstream os;
  os << "graph \"" << detail::dot_escape(tree.graph->name()) << "_c"
     << tree.component << "\" {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    const auto& x = tree.vertices[v];
    os << "  v" << v << " [label=\"" << v << "\\n"
       << detail::dot_escape(x.id) << "\", style="
       << (x.interior ? "solid" : "dashed") << "];\n";
  }
  for (const auto& e : tree.edges) {
    const bool interior =
        tree.vertices[e.u].interior && tree.vertices[e.v].interior;
    os << "  v" << e.u << " -- v" << e.v << " [style="
       << (interior ? "solid" : "dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace endtree

#endif  // ENDTREE_STRUCTURE_TREE_HPP_
