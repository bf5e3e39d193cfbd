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

// Finitely presented infinite graphs: a finite core plus finitely many
// periodic ends. An end repeats a segment template forever, level 0 being
// attached to the core. Because every template is connected across two
// consecutive copies, the part of an end beyond any level is connected, and
// a vertex set with finite edge boundary is constant on each end from some
// level on. That makes sets with finite boundary finite data: a side per core
// vertex and, per end, finitely many explicit levels plus a tail side.

#ifndef ENDTREE_ENDED_GRAPH_HPP_
#define ENDTREE_ENDED_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endtree/error.hpp"
#include "endtree/nested_sets.hpp"

namespace endtree {

using IndexPair = std::pair<std::size_t, std::size_t>;

enum class Side : std::uint8_t { kOut = 0, kIn = 1 };

inline Side opposite(Side s) { return s == Side::kIn ? Side::kOut : Side::kIn; }
inline char side_char(Side s) { return s == Side::kIn ? 'I' : 'O'; }

struct SegmentTemplate {
  std::vector<std::string> vertices;
  std::vector<IndexPair> internal_edges;  // both ends on the same level
  std::vector<IndexPair> cross_edges;     // (a on level i, b on level i + 1)
};

struct End {
  std::string name;
  SegmentTemplate segment;
  std::vector<IndexPair> attachments;  // (core vertex, segment vertex on 0)
};

struct GraphComponent {
  std::vector<std::size_t> core;  // ascending global ids
  std::vector<std::size_t> ends;  // ascending global ids
};

class EndedGraph {
 public:
  static std::shared_ptr<const EndedGraph> create(
      std::string name, std::vector<std::string> core_vertices,
      std::vector<IndexPair> core_edges, std::vector<End> ends) {
    auto g = std::shared_ptr<EndedGraph>(new EndedGraph());
    g->name_ = std::move(name);
    g->core_vertices_ = std::move(core_vertices);
    g->core_edges_ = std::move(core_edges);
    g->ends_ = std::move(ends);
    g->validate();
    g->compute_components();
    return g;
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& core_vertices() const {
    return core_vertices_;
  }
  const std::vector<IndexPair>& core_edges() const { return core_edges_; }
  const std::vector<End>& ends() const { return ends_; }
  const End& end(std::size_t e) const { return ends_[e]; }
  const std::vector<GraphComponent>& components() const {
    return components_;
  }
  const GraphComponent& component(std::size_t c) const {
    return components_[c];
  }

  std::size_t component_of_core(std::size_t u) const { return core_comp_[u]; }
  std::size_t component_of_end(std::size_t e) const { return end_comp_[e]; }
  // Position of a core vertex / end inside its component's lists.
  std::size_t local_core(std::size_t u) const { return core_local_[u]; }
  std::size_t local_end(std::size_t e) const { return end_local_[e]; }

  std::optional<std::size_t> find_core(const std::string& name) const {
    auto it = std::find(core_vertices_.begin(), core_vertices_.end(), name);
    if (it == core_vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - core_vertices_.begin());
  }
  std::optional<std::size_t> find_end(const std::string& name) const {
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      if (ends_[e].name == name) return e;
    }
    return std::nullopt;
  }

 private:
  EndedGraph() = default;

  static void fail(const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  }

  static void check_unique_names(const std::vector<std::string>& names,
                                 const std::string& what) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty()) fail(what + " name is empty");
      if (!seen.insert(n).second) fail("duplicate " + what + " '" + n + "'");
    }
  }

  static std::vector<IndexPair> normalized_undirected(
      const std::vector<IndexPair>& edges, std::size_t n,
      const std::string& what) {
    std::vector<IndexPair> out;
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) fail(what + " endpoint out of range");
      if (a == b) fail(what + " loop");
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      fail("duplicate " + what);
    }
    return out;
  }

  void validate() {
    check_unique_names(core_vertices_, "core vertex");
    normalized_undirected(core_edges_, core_vertices_.size(), "core edge");
    std::vector<std::string> end_names;
    for (const End& e : ends_) end_names.push_back(e.name);
    check_unique_names(end_names, "end");
    for (const End& e : ends_) {
      const auto& seg = e.segment;
      const std::size_t s = seg.vertices.size();
      const std::string where = "end '" + e.name + "': ";
      if (s == 0) fail(where + "segment template has no vertices");
      check_unique_names(seg.vertices, "segment vertex");
      normalized_undirected(seg.internal_edges, s, where + "segment edge");
      std::vector<IndexPair> cross = seg.cross_edges;
      for (auto [a, b] : cross) {
        if (a >= s || b >= s) fail(where + "cross edge out of range");
      }
      std::sort(cross.begin(), cross.end());
      if (std::adjacent_find(cross.begin(), cross.end()) != cross.end()) {
        fail(where + "duplicate cross edge");
      }
      if (cross.empty()) fail(where + "segment template has no cross edges");
      if (e.attachments.empty()) fail(where + "end is not attached");
      std::vector<IndexPair> att = e.attachments;
      for (auto [u, a] : att) {
        if (u >= core_vertices_.size() || a >= s) {
          fail(where + "attachment out of range");
        }
      }
      std::sort(att.begin(), att.end());
      if (std::adjacent_find(att.begin(), att.end()) != att.end()) {
        fail(where + "duplicate attachment");
      }
      // Two consecutive copies linked by the cross edges must be connected;
      // then the part of the end beyond any level is connected.
      detail::DisjointSets dsu(2 * s);
      for (auto [a, b] : seg.internal_edges) {
        dsu.unite(a, b);
        dsu.unite(s + a, s + b);
      }
      for (auto [a, b] : seg.cross_edges) dsu.unite(a, s + b);
      for (std::size_t v = 1; v < 2 * s; ++v) {
        if (dsu.find(v) != dsu.find(0)) {
          fail(where +
               "two consecutive segment copies are not connected; the end "
               "would not be a single end");
        }
      }
    }
  }

  void compute_components() {
    const std::size_t n = core_vertices_.size();
    detail::DisjointSets dsu(n);
    for (auto [u, v] : core_edges_) dsu.unite(u, v);
    for (const End& e : ends_) {
      for (auto [u, a] : e.attachments) dsu.unite(u, e.attachments[0].first);
    }
    std::map<std::size_t, std::size_t> root_to_comp;
    core_comp_.resize(n);
    core_local_.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
      auto [it, inserted] =
          root_to_comp.emplace(dsu.find(u), components_.size());
      if (inserted) components_.emplace_back();
      core_comp_[u] = it->second;
      core_local_[u] = components_[it->second].core.size();
      components_[it->second].core.push_back(u);
    }
    end_comp_.resize(ends_.size());
    end_local_.resize(ends_.size());
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      std::size_t c = core_comp_[ends_[e].attachments[0].first];
      end_comp_[e] = c;
      end_local_[e] = components_[c].ends.size();
      components_[c].ends.push_back(e);
    }
  }

  std::string name_;
  std::vector<std::string> core_vertices_;
  std::vector<IndexPair> core_edges_;
  std::vector<End> ends_;
  std::vector<GraphComponent> components_;
  std::vector<std::size_t> core_comp_, core_local_, end_comp_, end_local_;
};

using GraphPtr = std::shared_ptr<const EndedGraph>;

// ---------------------------------------------------------------------------
// Vertices and edges of the infinite graph (plus tail markers of windows).

struct VertexRef {
  enum class Kind : std::uint8_t { kCore, kSegment, kTail };
  Kind kind = Kind::kCore;
  std::size_t end = 0;
  std::size_t level = 0;
  std::size_t index = 0;  // core vertex or segment vertex

  static VertexRef core(std::size_t u) { return {Kind::kCore, 0, 0, u}; }
  static VertexRef segment(std::size_t e, std::size_t level, std::size_t a) {
    return {Kind::kSegment, e, level, a};
  }
  // Stands for every vertex of end e from the window depth on.
  static VertexRef tail(std::size_t e) { return {Kind::kTail, e, 0, 0}; }

  auto operator<=>(const VertexRef&) const = default;
};

struct EdgeRef {
  enum class Kind : std::uint8_t { kCore, kAttach, kCross, kInternal };
  Kind kind = Kind::kCore;
  std::size_t end = 0;
  std::size_t level = 0;
  std::size_t a = 0;
  std::size_t b = 0;

  static EdgeRef core(std::size_t u, std::size_t v) {
    return {Kind::kCore, 0, 0, std::min(u, v), std::max(u, v)};
  }
  static EdgeRef attach(std::size_t e, std::size_t u, std::size_t seg) {
    return {Kind::kAttach, e, 0, u, seg};
  }
  // From (level, a) to (level + 1, b).
  static EdgeRef cross(std::size_t e, std::size_t level, std::size_t a,
                       std::size_t b) {
    return {Kind::kCross, e, level, a, b};
  }
  static EdgeRef internal(std::size_t e, std::size_t level, std::size_t a,
                          std::size_t b) {
    return {Kind::kInternal, e, level, std::min(a, b), std::max(a, b)};
  }

  std::pair<VertexRef, VertexRef> endpoints() const {
    switch (kind) {
      case Kind::kCore: return {VertexRef::core(a), VertexRef::core(b)};
      case Kind::kAttach:
        return {VertexRef::core(a), VertexRef::segment(end, 0, b)};
      case Kind::kCross:
        return {VertexRef::segment(end, level, a),
                VertexRef::segment(end, level + 1, b)};
      case Kind::kInternal:
        return {VertexRef::segment(end, level, a),
                VertexRef::segment(end, level, b)};
    }
    return {};
  }

  auto operator<=>(const EdgeRef&) const = default;
};

inline std::string describe(const EndedGraph& g, const VertexRef& v) {
  switch (v.kind) {
    case VertexRef::Kind::kCore: return g.core_vertices()[v.index];
    case VertexRef::Kind::kSegment:
      return g.end(v.end).name + "." + std::to_string(v.level) + "." +
             g.end(v.end).segment.vertices[v.index];
    case VertexRef::Kind::kTail: return g.end(v.end).name + ".tail";
  }
  return "?";
}

inline std::string describe(const EndedGraph& g, const EdgeRef& e) {
  auto [x, y] = e.endpoints();
  return describe(g, x) + "--" + describe(g, y);
}

// Calls fn(edge) for every edge of component `comp` that touches the core or
// a level below `depth`. Every other edge joins two vertices on levels at
// least `depth`.
template <class Fn>
void for_each_edge(const EndedGraph& g, std::size_t comp, std::size_t depth,
                   Fn&& fn) {
  const GraphComponent& c = g.component(comp);
  for (auto [u, v] : g.core_edges()) {
    if (g.component_of_core(u) == comp) fn(EdgeRef::core(u, v));
  }
  for (std::size_t e : c.ends) {
    const End& end = g.end(e);
    for (auto [u, a] : end.attachments) fn(EdgeRef::attach(e, u, a));
    for (std::size_t level = 0; level < depth; ++level) {
      for (auto [a, b] : end.segment.internal_edges) {
        fn(EdgeRef::internal(e, level, a, b));
      }
      for (auto [a, b] : end.segment.cross_edges) {
        fn(EdgeRef::cross(e, level, a, b));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Window: the core plus `depth` levels of every end, with one marker per end
// standing for all deeper levels. Edges into the marker keep the identity of
// the real edge, so a window may contain parallel edges.

struct WindowGraph {
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    EdgeRef ref;
  };

  std::size_t depth = 0;
  std::vector<VertexRef> vertices;
  std::vector<std::size_t> vertex_component;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_component;
  std::map<VertexRef, std::size_t> index;

  std::size_t add_vertex(const VertexRef& v, std::size_t comp) {
    auto [it, inserted] = index.emplace(v, vertices.size());
    if (inserted) {
      vertices.push_back(v);
      vertex_component.push_back(comp);
    }
    return it->second;
  }

  // Maps a real vertex to its window vertex (deep levels go to the marker).
  std::size_t locate(const VertexRef& v) const {
    if (v.kind == VertexRef::Kind::kSegment && v.level >= depth) {
      return index.at(VertexRef::tail(v.end));
    }
    return index.at(v);
  }

  std::size_t edge_count(std::size_t comp) const {
    return static_cast<std::size_t>(
        std::count(edge_component.begin(), edge_component.end(), comp));
  }
};

inline void expand_component_into(const EndedGraph& g, std::size_t comp,
                                  std::size_t depth, WindowGraph& w) {
  const GraphComponent& c = g.component(comp);
  for (std::size_t u : c.core) w.add_vertex(VertexRef::core(u), comp);
  for (std::size_t e : c.ends) {
    const std::size_t s = g.end(e).segment.vertices.size();
    for (std::size_t level = 0; level < depth; ++level) {
      for (std::size_t a = 0; a < s; ++a) {
        w.add_vertex(VertexRef::segment(e, level, a), comp);
      }
    }
    w.add_vertex(VertexRef::tail(e), comp);
  }
  for_each_edge(g, comp, depth, [&](const EdgeRef& ref) {
    auto [x, y] = ref.endpoints();
    w.edges.push_back({w.locate(x), w.locate(y), ref});
    w.edge_component.push_back(comp);
  });
}

inline WindowGraph expand_window(const EndedGraph& g, std::size_t depth) {
  WindowGraph w;
  w.depth = depth;
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    expand_component_into(g, c, depth, w);
  }
  return w;
}

inline WindowGraph expand_component_window(const EndedGraph& g,
                                           std::size_t comp,
                                           std::size_t depth) {
  WindowGraph w;
  w.depth = depth;
  expand_component_into(g, comp, depth, w);
  return w;
}

// ---------------------------------------------------------------------------
// VertexSet: a subset of one component with finite edge boundary.

struct EndTrace {
  std::vector<std::vector<Side>> levels;  // explicit levels 0 .. depth-1
  Side tail = Side::kOut;                 // every deeper level

  Side at(std::size_t level, std::size_t v) const {
    return level < levels.size() ? levels[level][v] : tail;
  }
  bool operator==(const EndTrace&) const = default;
};

class VertexSet {
 public:
  VertexSet() = default;

  // `core` is indexed by position in the component's core list and
  // `traces` by position in its end list. Traces are trimmed to canonical
  // form: the deepest explicit level is never constantly the tail side.
  VertexSet(GraphPtr host, std::size_t component, std::vector<Side> core,
            std::vector<EndTrace> traces)
      : host_(std::move(host)),
        component_(component),
        core_(std::move(core)),
        traces_(std::move(traces)) {
    if (!host_ || component_ >= host_->components().size()) {
      throw Error(ErrorCode::kInvalidArgument, "no such component");
    }
    const GraphComponent& c = host_->component(component_);
    if (core_.size() != c.core.size() || traces_.size() != c.ends.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "side map does not match the component");
    }
    for (std::size_t i = 0; i < traces_.size(); ++i) {
      const std::size_t s = host_->end(c.ends[i]).segment.vertices.size();
      EndTrace& t = traces_[i];
      for (const auto& level : t.levels) {
        if (level.size() != s) {
          throw Error(ErrorCode::kInvalidArgument,
                      "level width does not match the segment template");
        }
      }
      while (!t.levels.empty() &&
             std::all_of(t.levels.back().begin(), t.levels.back().end(),
                         [&](Side x) { return x == t.tail; })) {
        t.levels.pop_back();
      }
    }
    encoding_ = encode();
  }

  static VertexSet constant(GraphPtr host, std::size_t component, Side side) {
    const GraphComponent& c = host->component(component);
    std::vector<EndTrace> traces(c.ends.size());
    for (auto& t : traces) t.tail = side;
    return VertexSet(std::move(host), component,
                     std::vector<Side>(c.core.size(), side), std::move(traces));
  }

  // Builds the set from a side for each vertex of a window over this
  // component; markers give the tail sides.
  static VertexSet from_window(GraphPtr host, std::size_t component,
                               const WindowGraph& window,
                               const std::vector<Side>& sides) {
    const GraphComponent& c = host->component(component);
    std::vector<Side> core;
    for (std::size_t u : c.core) {
      core.push_back(sides[window.index.at(VertexRef::core(u))]);
    }
    std::vector<EndTrace> traces;
    for (std::size_t e : c.ends) {
      EndTrace t;
      const std::size_t s = host->end(e).segment.vertices.size();
      for (std::size_t level = 0; level < window.depth; ++level) {
        std::vector<Side> row;
        for (std::size_t a = 0; a < s; ++a) {
          row.push_back(sides[window.index.at(VertexRef::segment(e, level, a))]);
        }
        t.levels.push_back(std::move(row));
      }
      t.tail = sides[window.index.at(VertexRef::tail(e))];
      traces.push_back(std::move(t));
    }
    return VertexSet(std::move(host), component, std::move(core),
                     std::move(traces));
  }

  const GraphPtr& host() const { return host_; }
  std::size_t component() const { return component_; }
  const std::vector<Side>& core() const { return core_; }
  const std::vector<EndTrace>& traces() const { return traces_; }
  const std::string& encoding() const { return encoding_; }

  // Largest number of explicit levels over the ends.
  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& t : traces_) d = std::max(d, t.levels.size());
    return d;
  }

  // Side of a vertex of this component; a kTail ref yields the tail side.
  Side side_of(const VertexRef& v) const {
    switch (v.kind) {
      case VertexRef::Kind::kCore: return core_[host_->local_core(v.index)];
      case VertexRef::Kind::kSegment:
        return traces_[host_->local_end(v.end)].at(v.level, v.index);
      case VertexRef::Kind::kTail:
        return traces_[host_->local_end(v.end)].tail;
    }
    return Side::kOut;
  }
  bool contains(const VertexRef& v) const { return side_of(v) == Side::kIn; }

  bool owns_tail(Side side = Side::kIn) const {
    return std::any_of(traces_.begin(), traces_.end(),
                       [&](const EndTrace& t) { return t.tail == side; });
  }
  // Infinite iff it owns a tail.
  bool is_infinite() const { return owns_tail(Side::kIn); }
  bool is_empty() const {
    if (std::find(core_.begin(), core_.end(), Side::kIn) != core_.end()) {
      return false;
    }
    for (const auto& t : traces_) {
      if (t.tail == Side::kIn) return false;
      for (const auto& level : t.levels) {
        if (std::find(level.begin(), level.end(), Side::kIn) != level.end()) {
          return false;
        }
      }
    }
    return true;
  }
  // Both the set and its complement are infinite.
  bool is_cut_like() const { return owns_tail(Side::kIn) && owns_tail(Side::kOut); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.host_ == b.host_ && a.component_ == b.component_ &&
           a.encoding_ == b.encoding_;
  }
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    if (a.host_ != b.host_) {
      return std::compare_three_way{}(a.host_.get(), b.host_.get());
    }
    if (auto c = a.component_ <=> b.component_; c != 0) return c;
    return a.encoding_.compare(b.encoding_) <=> 0;
  }

 private:
  // core=<sides>;<end>=<level>.<level>><tail>;...
  std::string encode() const {
    std::string out = "core=";
    for (Side s : core_) out += side_char(s);
    const GraphComponent& c = host_->component(component_);
    for (std::size_t i = 0; i < traces_.size(); ++i) {
      out += ';';
      out += host_->end(c.ends[i]).name;
      out += '=';
      for (std::size_t l = 0; l < traces_[i].levels.size(); ++l) {
        if (l) out += '.';
        for (Side s : traces_[i].levels[l]) out += side_char(s);
      }
      out += '>';
      out += side_char(traces_[i].tail);
    }
    return out;
  }

  GraphPtr host_;
  std::size_t component_ = 0;
  std::vector<Side> core_;
  std::vector<EndTrace> traces_;
  std::string encoding_;
};

namespace detail {

inline void require_compatible(const VertexSet& a, const VertexSet& b) {
  if (a.host() != b.host()) {
    throw Error(ErrorCode::kHostMismatch, "sets belong to different graphs");
  }
  if (a.component() != b.component()) {
    throw Error(ErrorCode::kMixedComponents,
                "sets lie in components " + std::to_string(a.component()) +
                    " and " + std::to_string(b.component()));
  }
}

// True if pred(side in a, side in b) holds at some vertex.
template <class Pred>
bool any_vertex(const VertexSet& a, const VertexSet& b, Pred pred) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < a.core().size(); ++i) {
    if (pred(a.core()[i], b.core()[i])) return true;
  }
  for (std::size_t i = 0; i < a.traces().size(); ++i) {
    const EndTrace& ta = a.traces()[i];
    const EndTrace& tb = b.traces()[i];
    if (pred(ta.tail, tb.tail)) return true;
    const std::size_t depth = std::max(ta.levels.size(), tb.levels.size());
    const std::size_t width =
        a.host()->end(a.host()->component(a.component()).ends[i])
            .segment.vertices.size();
    for (std::size_t l = 0; l < depth; ++l) {
      for (std::size_t v = 0; v < width; ++v) {
        if (pred(ta.at(l, v), tb.at(l, v))) return true;
      }
    }
  }
  return false;
}

template <class Op>
VertexSet combine(const VertexSet& a, const VertexSet& b, Op op) {
  require_compatible(a, b);
  std::vector<Side> core(a.core().size());
  for (std::size_t i = 0; i < core.size(); ++i) {
    core[i] = op(a.core()[i], b.core()[i]);
  }
  std::vector<EndTrace> traces(a.traces().size());
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const EndTrace& ta = a.traces()[i];
    const EndTrace& tb = b.traces()[i];
    const std::size_t depth = std::max(ta.levels.size(), tb.levels.size());
    const std::size_t width =
        a.host()->end(a.host()->component(a.component()).ends[i])
            .segment.vertices.size();
    traces[i].tail = op(ta.tail, tb.tail);
    traces[i].levels.assign(depth, std::vector<Side>(width));
    for (std::size_t l = 0; l < depth; ++l) {
      for (std::size_t v = 0; v < width; ++v) {
        traces[i].levels[l][v] = op(ta.at(l, v), tb.at(l, v));
      }
    }
  }
  return VertexSet(a.host(), a.component(), std::move(core), std::move(traces));
}

inline Side side_and(Side x, Side y) {
  return x == Side::kIn && y == Side::kIn ? Side::kIn : Side::kOut;
}
inline Side side_or(Side x, Side y) {
  return x == Side::kIn || y == Side::kIn ? Side::kIn : Side::kOut;
}

}  // namespace detail

// Complement within the component.
inline VertexSet complement(const VertexSet& a) {
  std::vector<Side> core = a.core();
  for (Side& s : core) s = opposite(s);
  std::vector<EndTrace> traces = a.traces();
  for (EndTrace& t : traces) {
    t.tail = opposite(t.tail);
    for (auto& level : t.levels) {
      for (Side& s : level) s = opposite(s);
    }
  }
  return VertexSet(a.host(), a.component(), std::move(core), std::move(traces));
}

inline VertexSet meet(const VertexSet& a, const VertexSet& b) {
  return detail::combine(a, b, detail::side_and);
}
inline VertexSet join(const VertexSet& a, const VertexSet& b) {
  return detail::combine(a, b, detail::side_or);
}
inline bool is_empty(const VertexSet& a) { return a.is_empty(); }
inline bool is_disjoint(const VertexSet& a, const VertexSet& b) {
  return !detail::any_vertex(a, b, [](Side x, Side y) {
    return x == Side::kIn && y == Side::kIn;
  });
}
// a ⊇ b
inline bool includes(const VertexSet& a, const VertexSet& b) {
  return !detail::any_vertex(a, b, [](Side x, Side y) {
    return x == Side::kOut && y == Side::kIn;
  });
}

inline std::vector<EdgeRef> edge_boundary(const VertexSet& a) {
  std::vector<EdgeRef> out;
  for_each_edge(*a.host(), a.component(), a.depth(), [&](const EdgeRef& e) {
    auto [x, y] = e.endpoints();
    if (a.side_of(x) != a.side_of(y)) out.push_back(e);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t boundary_size(const VertexSet& a) {
  std::size_t n = 0;
  for_each_edge(*a.host(), a.component(), a.depth(), [&](const EdgeRef& e) {
    auto [x, y] = e.endpoints();
    if (a.side_of(x) != a.side_of(y)) ++n;
  });
  return n;
}

// Vertices of the set incident to a boundary edge.
inline std::vector<VertexRef> vertex_boundary(const VertexSet& a) {
  std::set<VertexRef> out;
  for (const EdgeRef& e : edge_boundary(a)) {
    auto [x, y] = e.endpoints();
    out.insert(a.contains(x) ? x : y);
  }
  return {out.begin(), out.end()};
}

// Number of edges with one end in `a` and the other in `b`.
inline std::size_t count_edges_between(const VertexSet& a,
                                       const VertexSet& b) {
  detail::require_compatible(a, b);
  std::size_t n = 0;
  for_each_edge(*a.host(), a.component(), std::max(a.depth(), b.depth()),
                [&](const EdgeRef& e) {
                  auto [x, y] = e.endpoints();
                  if ((a.contains(x) && b.contains(y)) ||
                      (a.contains(y) && b.contains(x))) {
                    ++n;
                  }
                });
  return n;
}

struct SideComponent {
  std::vector<VertexRef> vertices;  // tail markers included for owned tails
  bool infinite = false;
};

// Connected components of the subgraph induced on one side of `a`.
inline std::vector<SideComponent> side_components(const VertexSet& a,
                                                  Side side) {
  WindowGraph w =
      expand_component_window(*a.host(), a.component(), a.depth() + 1);
  std::vector<std::vector<std::size_t>> adj(w.vertices.size());
  for (const auto& e : w.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(w.vertices.size(), 0);
  std::vector<SideComponent> out;
  for (std::size_t s = 0; s < w.vertices.size(); ++s) {
    if (seen[s] || a.side_of(w.vertices[s]) != side) continue;
    SideComponent comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      comp.vertices.push_back(w.vertices[v]);
      if (w.vertices[v].kind == VertexRef::Kind::kTail) comp.infinite = true;
      for (std::size_t x : adj[v]) {
        if (!seen[x] && a.side_of(w.vertices[x]) == side) {
          seen[x] = 1;
          q.push(x);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Parses the encoding produced by VertexSet::encoding().
inline VertexSet parse_vertex_set(GraphPtr host, std::size_t component,
                                  const std::string& text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::kParse, "vertex set '" + text + "': " + why);
  };
  auto side_from = [&](char ch) {
    if (ch == 'I') return Side::kIn;
    if (ch == 'O') return Side::kOut;
    throw bad(std::string("bad side '") + ch + "'");
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ';');) parts.push_back(p);
  if (parts.empty() || parts[0].rfind("core=", 0) != 0) {
    throw bad("missing core field");
  }
  std::vector<Side> core;
  for (char ch : parts[0].substr(5)) core.push_back(side_from(ch));
  const GraphComponent& c = host->component(component);
  if (parts.size() != c.ends.size() + 1) throw bad("wrong number of ends");
  std::vector<EndTrace> traces(c.ends.size());
  for (std::size_t i = 0; i < c.ends.size(); ++i) {
    const std::string& p = parts[i + 1];
    const std::string& name = host->end(c.ends[i]).name;
    if (p.rfind(name + "=", 0) != 0) throw bad("expected end " + name);
    std::string body = p.substr(name.size() + 1);
    auto gt = body.rfind('>');
    if (gt == std::string::npos || gt + 2 != body.size()) {
      throw bad("missing tail side");
    }
    traces[i].tail = side_from(body[gt + 1]);
    std::string levels = body.substr(0, gt);
    if (!levels.empty()) {
      std::stringstream ls(levels);
      for (std::string l; std::getline(ls, l, '.');) {
        std::vector<Side> row;
        for (char ch : l) row.push_back(side_from(ch));
        traces[i].levels.push_back(std::move(row));
      }
    }
  }
  return VertexSet(std::move(host), component, std::move(core),
                   std::move(traces));
}

// ---------------------------------------------------------------------------
// Cut: a vertex set that is infinite with infinite complement.

class Cut {
 public:
  Cut() = default;

  explicit Cut(VertexSet set) : set_(std::move(set)) {
    if (!set_.is_cut_like()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a cut: both sides must own a tail (" +
                      set_.encoding() + ")");
    }
  }

  static std::optional<Cut> from(VertexSet set) {
    if (!set.is_cut_like()) return std::nullopt;
    return Cut(std::move(set));
  }

  const VertexSet& vertices() const { return set_; }
  const GraphPtr& host() const { return set_.host(); }
  std::size_t component() const { return set_.component(); }
  std::size_t depth() const { return set_.depth(); }
  const std::string& encoding() const { return set_.encoding(); }
  Side side_of(const VertexRef& v) const { return set_.side_of(v); }

  friend bool operator==(const Cut& a, const Cut& b) {
    return a.set_ == b.set_;
  }
  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
    return a.set_ <=> b.set_;
  }

 private:
  VertexSet set_;
};

inline Cut complement(const Cut& a) {
  return Cut(complement(a.vertices()));
}
inline bool is_empty(const Cut&) { return false; }
inline bool is_disjoint(const Cut& a, const Cut& b) {
  return is_disjoint(a.vertices(), b.vertices());
}
inline bool includes(const Cut& a, const Cut& b) {
  return includes(a.vertices(), b.vertices());
}
inline VertexSet meet(const Cut& a, const Cut& b) {
  return meet(a.vertices(), b.vertices());
}
inline std::vector<EdgeRef> edge_boundary(const Cut& a) {
  return edge_boundary(a.vertices());
}
inline std::size_t boundary_size(const Cut& a) {
  return boundary_size(a.vertices());
}
inline std::vector<VertexRef> vertex_boundary(const Cut& a) {
  return vertex_boundary(a.vertices());
}
inline std::vector<SideComponent> side_components(const Cut& a, Side side) {
  return side_components(a.vertices(), side);
}

static_assert(SetAlgebra<VertexSet>);
static_assert(SetAlgebra<Cut>);

inline bool is_nested_cuts(const Cut& a, const Cut& b) { return nested(a, b); }
inline bool is_orthogonal_cuts(const Cut& a, const Cut& b) {
  return orthogonal(a, b);
}

// Both sides connected.
inline bool is_neat(const Cut& a) {
  return side_components(a, Side::kIn).size() == 1 &&
         side_components(a, Side::kOut).size() == 1;
}

// Levels `depth` and beyond of end `e`.
inline Cut tail_cut(const GraphPtr& host, std::size_t e, std::size_t depth) {
  const std::size_t comp = host->component_of_end(e);
  VertexSet base = VertexSet::constant(host, comp, Side::kOut);
  std::vector<EndTrace> traces = base.traces();
  const std::size_t width = host->end(e).segment.vertices.size();
  EndTrace& t = traces[host->local_end(e)];
  t.levels.assign(depth, std::vector<Side>(width, Side::kOut));
  t.tail = Side::kIn;
  return Cut(VertexSet(host, comp, base.core(), std::move(traces)));
}

// ---------------------------------------------------------------------------
// Graph text format, one declaration per line:
//   graph NAME | core_vertex v | core_edge u v | end E | seg_vertex E a
//   seg_edge E a b | seg_cross E a b | attach E u a
// Tokens are whitespace separated and '#' starts a comment.

inline GraphPtr parse_graph(std::istream& in) {
  std::string name = "unnamed";
  std::vector<std::string> core;
  std::unordered_map<std::string, std::size_t> core_index;
  std::vector<IndexPair> core_edges;
  std::vector<End> ends;
  std::unordered_map<std::string, std::size_t> end_index;
  std::vector<std::unordered_map<std::string, std::size_t>> seg_index;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(ls),
                                 std::istream_iterator<std::string>()};
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    auto need = [&](std::size_t n) {
      if (tok.size() != n) {
        throw Error(ErrorCode::kParse, where + "'" + tok[0] + "' expects " +
                                           std::to_string(n - 1) + " fields");
      }
    };
    auto core_id = [&](const std::string& v) {
      auto it = core_index.find(v);
      if (it == core_index.end()) {
        throw Error(ErrorCode::kParse, where + "unknown core vertex '" + v + "'");
      }
      return it->second;
    };
    auto end_id = [&](const std::string& e) {
      auto it = end_index.find(e);
      if (it == end_index.end()) {
        throw Error(ErrorCode::kParse, where + "unknown end '" + e + "'");
      }
      return it->second;
    };
    auto seg_id = [&](std::size_t e, const std::string& a) {
      auto it = seg_index[e].find(a);
      if (it == seg_index[e].end()) {
        throw Error(ErrorCode::kParse,
                    where + "unknown segment vertex '" + a + "'");
      }
      return it->second;
    };
    const std::string& kw = tok[0];
    if (kw == "graph") {
      need(2);
      name = tok[1];
    } else if (kw == "core_vertex") {
      need(2);
      if (!core_index.emplace(tok[1], core.size()).second) {
        throw Error(ErrorCode::kParse, where + "duplicate core vertex");
      }
      core.push_back(tok[1]);
    } else if (kw == "core_edge") {
      need(3);
      core_edges.emplace_back(core_id(tok[1]), core_id(tok[2]));
    } else if (kw == "end") {
      need(2);
      if (!end_index.emplace(tok[1], ends.size()).second) {
        throw Error(ErrorCode::kParse, where + "duplicate end");
      }
      ends.push_back(End{tok[1], {}, {}});
      seg_index.emplace_back();
    } else if (kw == "seg_vertex") {
      need(3);
      std::size_t e = end_id(tok[1]);
      if (!seg_index[e].emplace(tok[2], ends[e].segment.vertices.size()).second) {
        throw Error(ErrorCode::kParse, where + "duplicate segment vertex");
      }
      ends[e].segment.vertices.push_back(tok[2]);
    } else if (kw == "seg_edge") {
      need(4);
      std::size_t e = end_id(tok[1]);
      ends[e].segment.internal_edges.emplace_back(seg_id(e, tok[2]),
                                                  seg_id(e, tok[3]));
    } else if (kw == "seg_cross") {
      need(4);
      std::size_t e = end_id(tok[1]);
      ends[e].segment.cross_edges.emplace_back(seg_id(e, tok[2]),
                                               seg_id(e, tok[3]));
    } else if (kw == "attach") {
      need(4);
      std::size_t e = end_id(tok[1]);
      ends[e].attachments.emplace_back(core_id(tok[2]), seg_id(e, tok[3]));
    } else {
      throw Error(ErrorCode::kParse, where + "unknown declaration '" + kw + "'");
    }
  }
  try {
    return EndedGraph::create(name, std::move(core), std::move(core_edges),
                              std::move(ends));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

inline std::string write_graph(const EndedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.name() << "\n";
  for (const auto& v : g.core_vertices()) out << "core_vertex " << v << "\n";
  for (auto [u, v] : g.core_edges()) {
    out << "core_edge " << g.core_vertices()[u] << " " << g.core_vertices()[v]
        << "\n";
  }
  for (const End& e : g.ends()) {
    const auto& names = e.segment.vertices;
    out << "end " << e.name << "\n";
    for (const auto& a : names) out << "seg_vertex " << e.name << " " << a << "\n";
    for (auto [a, b] : e.segment.internal_edges) {
      out << "seg_edge " << e.name << " " << names[a] << " " << names[b] << "\n";
    }
    for (auto [a, b] : e.segment.cross_edges) {
      out << "seg_cross " << e.name << " " << names[a] << " " << names[b]
          << "\n";
    }
    for (auto [u, a] : e.attachments) {
      out << "attach " << e.name << " " << g.core_vertices()[u] << " "
          << names[a] << "\n";
    }
  }
  return out.str();
}

}  // namespace endtree

#endif  // ENDTREE_ENDED_GRAPH_HPP_
