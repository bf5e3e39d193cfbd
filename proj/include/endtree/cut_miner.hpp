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

// Mining cuts of an ended graph inside a depth window: exhaustive search over
// candidate boundaries, the minimum boundary size k0, thin cuts, the
// non-nestedness degrees among them, and the cuts of minimum degree.
//
// Window protocol. Only cuts whose explicit trace depth is at most the window
// depth D are visible. A cut is interior when its depth is below D - m, m
// being the margin; degrees and selections are only trusted on interior cuts
// and are recomputed at depth D + 1 (same interior) to confirm they are
// stable. A disagreement raises kWindowTooSmall.

#ifndef ENDTREE_CUT_MINER_HPP_
#define ENDTREE_CUT_MINER_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "endtree/ended_graph.hpp"
#include "endtree/error.hpp"
#include "endtree/nested_sets.hpp"

namespace endtree {

struct Window {
  std::size_t depth = 4;
  std::size_t margin = 2;

  static Window with_default_margin(std::size_t depth) {
    return Window{depth, (depth + 1) / 2};
  }

  void validate() const {
    if (margin > depth) {
      throw Error(ErrorCode::kInvalidArgument, "margin exceeds window depth");
    }
  }

  bool is_interior(const Cut& c) const { return c.depth() + margin < depth; }

  Window grown() const { return Window{depth + 1, margin + 1}; }
};

struct EnumerationOptions {
  std::size_t threads = 1;
};

namespace detail {

// Exhaustive search for cuts with a prescribed boundary inside the window of
// one component. A candidate edge set F is accepted when the window minus F
// splits into two sides, each owning a tail marker, with every edge of F
// running between the sides.
class BoundarySearch {
 public:
  BoundarySearch(GraphPtr host, std::size_t component, std::size_t depth)
      : host_(std::move(host)),
        component_(component),
        window_(expand_component_window(*host_, component, depth)) {
    for (std::size_t i = 0; i < window_.edges.size(); ++i) {
      edge_index_.emplace(window_.edges[i].ref, i);
    }
  }

  const WindowGraph& window() const { return window_; }
  std::size_t edge_count() const { return window_.edges.size(); }

  std::optional<std::size_t> edge_index(const EdgeRef& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  // Side per window vertex, vertex 0 on the In side, for a cut whose
  // boundary is exactly `subset`; nullopt if there is none.
  std::optional<std::vector<Side>> split(
      std::span<const std::size_t> subset) const {
    const std::size_t n = window_.vertices.size();
    std::vector<char> removed(window_.edges.size(), 0);
    for (std::size_t i : subset) removed[i] = 1;
    DisjointSets dsu(n);
    for (std::size_t i = 0; i < window_.edges.size(); ++i) {
      if (!removed[i]) dsu.unite(window_.edges[i].u, window_.edges[i].v);
    }
    // Quotient graph on pieces, linked by the removed edges.
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (std::size_t i : subset) {
      std::size_t a = dsu.find(window_.edges[i].u);
      std::size_t b = dsu.find(window_.edges[i].v);
      if (a == b) return std::nullopt;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::map<std::size_t, Side> color;
    std::vector<std::size_t> stack{dsu.find(0)};
    color[dsu.find(0)] = Side::kIn;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x]) {
        auto it = color.find(y);
        if (it == color.end()) {
          color[y] = opposite(color[x]);
          stack.push_back(y);
        } else if (it->second == color[x]) {
          return std::nullopt;
        }
      }
    }
    std::vector<Side> sides(n);
    bool in_tail = false;
    bool out_tail = false;
    for (std::size_t v = 0; v < n; ++v) {
      auto it = color.find(dsu.find(v));
      // Every piece is reachable since the window is connected.
      if (it == color.end()) return std::nullopt;
      sides[v] = it->second;
      if (window_.vertices[v].kind == VertexRef::Kind::kTail) {
        (sides[v] == Side::kIn ? in_tail : out_tail) = true;
      }
    }
    if (!in_tail || !out_tail) return std::nullopt;
    return sides;
  }

  Cut make_cut(const std::vector<Side>& sides) const {
    return Cut(VertexSet::from_window(host_, component_, window_, sides));
  }

  // Both orientations of every cut whose boundary has exactly k edges.
  std::vector<Cut> cuts_with_boundary_size(std::size_t k,
                                           std::size_t threads = 1) const {
    const std::size_t m = edge_count();
    if (k == 0 || k > m) return {};
    threads = std::max<std::size_t>(1, std::min(threads, m));
    std::vector<std::vector<Cut>> found(threads);
    auto worker = [&](std::size_t t) {
      std::vector<std::size_t> subset(k);
      for (std::size_t first = t; first + k <= m; first += threads) {
        subset[0] = first;
        visit(subset, 1, first + 1, found[t]);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    std::vector<Cut> out;
    for (auto& part : found) {
      for (auto& c : part) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void visit(std::vector<std::size_t>& subset, std::size_t pos,
             std::size_t next, std::vector<Cut>& out) const {
    if (pos == subset.size()) {
      if (auto sides = split(subset)) {
        Cut c = make_cut(*sides);
        out.push_back(complement(c));
        out.push_back(std::move(c));
      }
      return;
    }
    for (std::size_t i = next; i + (subset.size() - pos) <= edge_count();
         ++i) {
      subset[pos] = i;
      visit(subset, pos + 1, i + 1, out);
    }
  }

  GraphPtr host_;
  std::size_t component_;
  WindowGraph window_;
  std::map<EdgeRef, std::size_t> edge_index_;
};

inline void require_multi_ended(const EndedGraph& g, std::size_t comp) {
  const std::size_t n = g.component(comp).ends.size();
  if (n < 2) {
    throw Error(ErrorCode::kNotMultiEnded,
                "component " + std::to_string(comp) + " has " +
                    std::to_string(n) + (n == 1 ? " end" : " ends"));
  }
}

inline std::size_t min_boundary_in_window(const GraphPtr& g, std::size_t comp,
                                          std::size_t depth,
                                          std::size_t threads) {
  BoundarySearch search(g, comp, depth);
  for (std::size_t k = 1; k <= search.edge_count(); ++k) {
    if (!search.cuts_with_boundary_size(k, threads).empty()) return k;
  }
  throw Error(ErrorCode::kInvariantViolation,
              "multi-ended component without a cut in the window");
}

}  // namespace detail

// All cuts with |boundary| <= k_max and trace depth <= window depth, in every
// component, sorted by (component, encoding).
inline std::vector<Cut> enumerate_cuts(const GraphPtr& g, std::size_t k_max,
                                       const Window& w,
                                       const EnumerationOptions& opts = {}) {
  w.validate();
  std::vector<Cut> out;
  for (std::size_t c = 0; c < g->components().size(); ++c) {
    detail::BoundarySearch search(g, c, w.depth);
    for (std::size_t k = 1; k <= k_max; ++k) {
      for (auto& cut : search.cuts_with_boundary_size(k, opts.threads)) {
        out.push_back(std::move(cut));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum boundary size per component, confirmed at depth D + 1.
inline std::vector<std::size_t> compute_k0(const GraphPtr& g, const Window& w,
                                           const EnumerationOptions& opts = {}) {
  w.validate();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < g->components().size(); ++c) {
    detail::require_multi_ended(*g, c);
    std::size_t k = detail::min_boundary_in_window(g, c, w.depth, opts.threads);
    std::size_t next =
        detail::min_boundary_in_window(g, c, w.depth + 1, opts.threads);
    if (k != next) {
      throw Error(ErrorCode::kWindowTooSmall,
                  "k0 of component " + std::to_string(c) + " changes from " +
                      std::to_string(k) + " to " + std::to_string(next) +
                      " at depth " + std::to_string(w.depth + 1));
    }
    out.push_back(k);
  }
  return out;
}

// True if no proper nonempty subset of the boundary is itself the boundary
// of a cut.
inline bool is_minimal_edge_cut(const Cut& c) {
  detail::BoundarySearch search(c.host(), c.component(), c.depth());
  std::vector<std::size_t> boundary;
  for (const EdgeRef& e : edge_boundary(c)) {
    auto i = search.edge_index(e);
    if (!i) {
      throw Error(ErrorCode::kInvariantViolation,
                  "boundary edge outside the cut's own window");
    }
    boundary.push_back(*i);
  }
  const std::size_t k = boundary.size();
  if (k > 20) throw Error(ErrorCode::kTooLarge, "boundary too large");
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) subset.push_back(boundary[i]);
    }
    if (search.split(subset)) return false;
  }
  return true;
}

// Thin cuts of component `comp` with boundary size k0; each is checked to be
// neat.
inline std::vector<Cut> thin_cuts_of_component(
    const GraphPtr& g, std::size_t comp, std::size_t k0, const Window& w,
    const EnumerationOptions& opts = {}) {
  detail::BoundarySearch search(g, comp, w.depth);
  std::vector<Cut> cuts = search.cuts_with_boundary_size(k0, opts.threads);
  for (const Cut& c : cuts) {
    if (!is_neat(c)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "thin cut with a disconnected side: " + c.encoding());
    }
  }
  return cuts;
}

inline std::vector<Cut> thin_cuts(const GraphPtr& g, const Window& w,
                                  const EnumerationOptions& opts = {}) {
  std::vector<std::size_t> k0 = compute_k0(g, w, opts);
  std::vector<Cut> out;
  for (std::size_t c = 0; c < k0.size(); ++c) {
    for (auto& cut : thin_cuts_of_component(g, c, k0[c], w, opts)) {
      out.push_back(std::move(cut));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Non-nestedness among a fixed list of cuts.

class NonNestednessIndex {
 public:
  NonNestednessIndex() = default;

  explicit NonNestednessIndex(std::vector<Cut> cuts) : cuts_(std::move(cuts)) {
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
    neighbors_.resize(cuts_.size());
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      for (std::size_t j = i + 1; j < cuts_.size(); ++j) {
        if (cuts_[i].host() != cuts_[j].host() ||
            cuts_[i].component() != cuts_[j].component()) {
          continue;
        }
        if (!nested(cuts_[i], cuts_[j])) {
          neighbors_[i].push_back(j);
          neighbors_[j].push_back(i);
        }
      }
    }
  }

  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }

  std::optional<std::size_t> find(const Cut& c) const {
    auto it = std::lower_bound(cuts_.begin(), cuts_.end(), c);
    if (it == cuts_.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - cuts_.begin());
  }

  const std::vector<std::size_t>& neighbors(std::size_t i) const {
    return neighbors_[i];
  }
  std::size_t degree(std::size_t i) const { return neighbors_[i].size(); }

 private:
  std::vector<Cut> cuts_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

// Indexed cuts not nested with `a`. Only interior cuts are accepted.
inline std::vector<Cut> neighborhood(const NonNestednessIndex& index,
                                     const Cut& a, const Window& w) {
  if (!w.is_interior(a)) {
    throw Error(ErrorCode::kOutsideMargin,
                "cut lies in the window margin: " + a.encoding());
  }
  std::vector<Cut> out;
  for (const Cut& b : index.cuts()) {
    if (b.host() == a.host() && b.component() == a.component() &&
        !nested(a, b)) {
      out.push_back(b);
    }
  }
  return out;
}

inline std::size_t degree(const NonNestednessIndex& index, const Cut& a,
                          const Window& w) {
  return neighborhood(index, a, w).size();
}

// Key shared by cuts that differ only by pushing the pattern on one end
// deeper, one level at a time: the leading levels of a trace that lie
// uniformly on one side are dropped.
inline std::string shift_family_key(const Cut& c) {
  std::string key = std::to_string(c.component()) + "|";
  for (Side s : c.vertices().core()) key += side_char(s);
  for (const EndTrace& t : c.vertices().traces()) {
    key += '|';
    std::size_t run = 0;
    for (const auto& level : t.levels) {
      const Side first = t.levels.front().front();
      if (!std::all_of(level.begin(), level.end(),
                       [&](Side s) { return s == first; })) {
        break;
      }
      ++run;
    }
    for (std::size_t l = run; l < t.levels.size(); ++l) {
      if (l > run) key += '.';
      for (Side s : t.levels[l]) key += side_char(s);
    }
    key += '>';
    key += side_char(t.tail);
  }
  return key;
}

// ---------------------------------------------------------------------------
// Full analysis of a graph in a window.

struct ComponentAnalysis {
  std::size_t component = 0;
  std::size_t ends = 0;
  std::size_t k0 = 0;
  std::vector<Cut> thin;             // sorted
  std::vector<std::size_t> degree;   // within the window, per thin cut
  std::vector<bool> interior;        // per thin cut
  std::vector<std::size_t> family;   // shift family id, per thin cut
  std::size_t min_degree = 0;        // over interior thin cuts
  std::vector<std::size_t> selected; // thin cuts of minimum degree

  std::vector<Cut> selected_cuts() const {
    std::vector<Cut> out;
    for (std::size_t i : selected) out.push_back(thin[i]);
    return out;
  }
  std::size_t selected_interior_count() const {
    return static_cast<std::size_t>(std::count_if(
        selected.begin(), selected.end(),
        [&](std::size_t i) { return interior[i]; }));
  }
  std::optional<std::size_t> find(const Cut& c) const {
    auto it = std::lower_bound(thin.begin(), thin.end(), c);
    if (it == thin.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - thin.begin());
  }
};

struct Analysis {
  GraphPtr graph;
  Window window;
  std::vector<ComponentAnalysis> components;
};

struct AnalyzeOptions {
  bool check_stability = true;
  std::size_t threads = 1;
};

namespace detail {

inline ComponentAnalysis analyze_component(const GraphPtr& g, std::size_t comp,
                                           const Window& w,
                                           std::size_t threads) {
  require_multi_ended(*g, comp);
  ComponentAnalysis out;
  out.component = comp;
  out.ends = g->component(comp).ends.size();
  out.k0 = min_boundary_in_window(g, comp, w.depth, threads);
  out.thin = thin_cuts_of_component(g, comp, out.k0, w, {threads});
  NonNestednessIndex index(out.thin);
  std::map<std::string, std::size_t> families;
  bool any_interior = false;
  for (std::size_t i = 0; i < out.thin.size(); ++i) {
    out.degree.push_back(index.degree(i));
    out.interior.push_back(w.is_interior(out.thin[i]));
    auto [it, inserted] =
        families.emplace(shift_family_key(out.thin[i]), families.size());
    out.family.push_back(it->second);
    if (out.interior.back()) {
      out.min_degree = any_interior ? std::min(out.min_degree, out.degree[i])
                                    : out.degree[i];
      any_interior = true;
    }
  }
  if (!any_interior) {
    throw Error(ErrorCode::kWindowTooSmall,
                "component " + std::to_string(comp) +
                    " has no interior thin cut at depth " +
                    std::to_string(w.depth));
  }
  for (std::size_t i = 0; i < out.thin.size(); ++i) {
    if (out.degree[i] == out.min_degree) out.selected.push_back(i);
  }
  for (std::size_t x = 0; x < out.selected.size(); ++x) {
    for (std::size_t y = x + 1; y < out.selected.size(); ++y) {
      const Cut& a = out.thin[out.selected[x]];
      const Cut& b = out.thin[out.selected[y]];
      if (!nested(a, b)) {
        throw Error(ErrorCode::kNestednessViolation,
                    "minimum-degree cuts are not nested: " + a.encoding() +
                        " / " + b.encoding());
      }
    }
  }
  return out;
}

struct InteriorSummary {
  std::size_t k0 = 0;
  std::size_t min_degree = 0;
  std::map<std::string, std::size_t> degree;  // interior thin cut -> degree
  std::set<std::string> selected;             // interior selected cuts

  explicit InteriorSummary(const ComponentAnalysis& a)
      : k0(a.k0), min_degree(a.min_degree) {
    for (std::size_t i = 0; i < a.thin.size(); ++i) {
      if (!a.interior[i]) continue;
      degree.emplace(a.thin[i].encoding(), a.degree[i]);
    }
    for (std::size_t i : a.selected) {
      if (a.interior[i]) selected.insert(a.thin[i].encoding());
    }
  }
};

}  // namespace detail

inline Analysis analyze(const GraphPtr& g, const Window& w,
                        const AnalyzeOptions& opts = {}) {
  w.validate();
  Analysis out{g, w, {}};
  for (std::size_t c = 0; c < g->components().size(); ++c) {
    out.components.push_back(
        detail::analyze_component(g, c, w, opts.threads));
  }
  if (!opts.check_stability) return out;
  const Window next = w.grown();
  for (std::size_t c = 0; c < g->components().size(); ++c) {
    detail::InteriorSummary here(out.components[c]);
    detail::InteriorSummary there(
        detail::analyze_component(g, c, next, opts.threads));
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::kWindowTooSmall,
                  "component " + std::to_string(c) + ": " + what +
                      " changes between depth " + std::to_string(w.depth) +
                      " and " + std::to_string(next.depth));
    };
    if (here.k0 != there.k0) fail("k0");
    if (here.degree != there.degree) fail("interior thin cuts or degrees");
    if (here.min_degree != there.min_degree) fail("minimum degree");
    if (here.selected != there.selected) fail("minimum-degree selection");
  }
  return out;
}

// The minimum-degree thin cuts of every component, verified nested.
inline std::vector<Cut> select_min_degree_cuts(
    const GraphPtr& g, const Window& w, const AnalyzeOptions& opts = {}) {
  std::vector<Cut> out;
  for (const auto& comp : analyze(g, w, opts).components) {
    for (auto& c : comp.selected_cuts()) out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corners of two cuts.

struct CornerDiagnostics {
  // Complements taken so that A∩B and A^c∩B^c are the infinite corners.
  bool complemented_a = false;
  bool complemented_b = false;
  std::size_t e_a = 0;    // A∩B  -- A∩B^c
  std::size_t e_b = 0;    // A∩B  -- A^c∩B
  std::size_t e_a_c = 0;  // A^c∩B -- A^c∩B^c
  std::size_t e_b_c = 0;  // A∩B^c -- A^c∩B^c
  std::size_t d_ab = 0;   // A∩B  -- A^c∩B^c
  std::size_t d_ab_c = 0; // A∩B^c -- A^c∩B
  std::size_t boundary_a = 0;
  std::size_t boundary_b = 0;
  std::size_t corner_boundary = 0;    // |∂(A∩B)|
  std::size_t opposite_boundary = 0;  // |∂(A^c∩B^c)|
  bool both_thin = false;             // |∂A| = |∂B| = k0
  std::optional<Cut> corner;          // A∩B
  std::optional<Cut> opposite;        // A^c∩B^c
};

// Edge counts between the four corners of (A, B). The boundary identity is
// always checked; for thin A and B the corners must be thin cuts, with no
// edge between the two finite-or-infinite off-diagonal corners. Violations
// raise kInvariantViolation.
inline CornerDiagnostics corner_diagnostics(const Cut& a_in, const Cut& b_in,
                                            std::size_t k0) {
  if (a_in.host() != b_in.host()) {
    throw Error(ErrorCode::kHostMismatch, "cuts belong to different graphs");
  }
  if (a_in.component() != b_in.component()) {
    throw Error(ErrorCode::kMixedComponents, "cuts in different components");
  }
  if (a_in == b_in || a_in == complement(b_in)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "degenerate pair: two corners are empty");
  }
  CornerDiagnostics d;
  std::optional<std::pair<Cut, Cut>> pair;
  for (int flip_a = 0; flip_a < 2 && !pair; ++flip_a) {
    for (int flip_b = 0; flip_b < 2 && !pair; ++flip_b) {
      Cut a = flip_a ? complement(a_in) : a_in;
      Cut b = flip_b ? complement(b_in) : b_in;
      if (meet(a, b).is_infinite() &&
          meet(complement(a), complement(b)).is_infinite()) {
        pair.emplace(a, b);
        d.complemented_a = flip_a;
        d.complemented_b = flip_b;
      }
    }
  }
  if (!pair) {
    throw Error(ErrorCode::kPreconditionViolated,
                "no pair of infinite opposite corners");
  }
  const Cut& a = pair->first;
  const Cut& b = pair->second;
  const VertexSet ac = complement(a.vertices());
  const VertexSet bc = complement(b.vertices());
  const VertexSet ab = meet(a.vertices(), b.vertices());
  const VertexSet abc = meet(a.vertices(), bc);
  const VertexSet acb = meet(ac, b.vertices());
  const VertexSet acbc = meet(ac, bc);
  d.e_a = count_edges_between(ab, abc);
  d.e_b = count_edges_between(ab, acb);
  d.e_a_c = count_edges_between(acb, acbc);
  d.e_b_c = count_edges_between(abc, acbc);
  d.d_ab = count_edges_between(ab, acbc);
  d.d_ab_c = count_edges_between(abc, acb);
  d.boundary_a = boundary_size(a);
  d.boundary_b = boundary_size(b);
  d.corner_boundary = boundary_size(ab);
  d.opposite_boundary = boundary_size(acbc);
  d.corner = Cut::from(ab);
  d.opposite = Cut::from(acbc);

  if (d.e_b + d.e_b_c + d.d_ab + d.d_ab_c != d.boundary_a ||
      d.e_a + d.e_a_c + d.d_ab + d.d_ab_c != d.boundary_b) {
    throw Error(ErrorCode::kInvariantViolation,
                "corner edge counts do not add up to the boundaries");
  }
  d.both_thin = d.boundary_a == k0 && d.boundary_b == k0;
  if (d.both_thin) {
    const bool ok = d.d_ab_c == 0 && d.e_a == d.e_b_c && d.e_a_c == d.e_b &&
                    d.corner_boundary == k0 && d.opposite_boundary == k0 &&
                    d.corner.has_value() && d.opposite.has_value();
    if (!ok) {
      throw Error(ErrorCode::kInvariantViolation,
                  "opposite infinite corners of thin cuts are not thin: " +
                      a.encoding() + " / " + b.encoding());
    }
  }
  return d;
}

struct DegreeInequality {
  std::size_t corner_degrees = 0;  // nd(A∩B) + nd(A^c∩B^c)
  std::size_t cut_degrees = 0;     // nd(A) + nd(B)
  bool strict_required = false;    // A and B are not nested
  bool holds = false;
};

// Compares degrees of two indexed cuts against those of their infinite
// opposite corners. Corners must be indexed too.
inline DegreeInequality degree_inequality(const NonNestednessIndex& index,
                                          const Cut& a, const Cut& b,
                                          std::size_t k0) {
  CornerDiagnostics d = corner_diagnostics(a, b, k0);
  if (!d.corner || !d.opposite) {
    throw Error(ErrorCode::kPreconditionViolated, "corners are not cuts");
  }
  auto ia = index.find(a);
  auto ib = index.find(b);
  auto ic = index.find(*d.corner);
  auto io = index.find(*d.opposite);
  if (!ia || !ib || !ic || !io) {
    throw Error(ErrorCode::kPreconditionViolated,
                "cut or corner missing from the index");
  }
  DegreeInequality r;
  r.corner_degrees = index.degree(*ic) + index.degree(*io);
  r.cut_degrees = index.degree(*ia) + index.degree(*ib);
  r.strict_required = !nested(a, b);
  r.holds = r.strict_required ? r.corner_degrees + 2 <= r.cut_degrees
                              : r.corner_degrees <= r.cut_degrees;
  return r;
}

}  // namespace endtree

#endif  // ENDTREE_CUT_MINER_HPP_
