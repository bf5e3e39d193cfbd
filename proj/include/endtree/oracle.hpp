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

// Brute-force reference for the cut miner. It expands its own window, tries
// every 2-colouring of the window vertices (tail markers are atoms) and works
// with bitmasks from there on. Only the final conversion to Cut and the
// canonical tree form are shared with the rest of the library.

#ifndef ENDTREE_ORACLE_HPP_
#define ENDTREE_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "endtree/cut_miner.hpp"
#include "endtree/ended_graph.hpp"
#include "endtree/error.hpp"
#include "endtree/structure_tree.hpp"
#include "endtree/tree_isomorphism.hpp"

namespace endtree {

inline constexpr std::size_t kOracleMaxEdges = 24;

namespace oracle_detail {

using Mask = std::uint64_t;

struct Colouring {
  Mask in = 0;
  std::size_t boundary = 0;
  std::size_t depth = 0;
};

// Window of one component: core vertices, then per end `depth` levels of the
// template followed by one marker.
class OracleWindow {
 public:
  OracleWindow(const EndedGraph& g, std::size_t comp, std::size_t depth)
      : g_(g), comp_(comp), depth_(depth) {
    const GraphComponent& c = g.component(comp);
    n_ = c.core.size();
    for (std::size_t e : c.ends) {
      base_.push_back(n_);
      width_.push_back(g.end(e).segment.vertices.size());
      n_ += depth * width_.back() + 1;
    }
    for (auto [u, v] : g.core_edges()) {
      if (g.component_of_core(u) == comp) {
        edges_.emplace_back(g.local_core(u), g.local_core(v));
      }
    }
    for (std::size_t j = 0; j < c.ends.size(); ++j) {
      const End& end = g.end(c.ends[j]);
      for (auto [u, a] : end.attachments) {
        edges_.emplace_back(g.local_core(u), at(j, 0, a));
      }
      for (std::size_t l = 0; l < depth; ++l) {
        for (auto [a, b] : end.segment.internal_edges) {
          edges_.emplace_back(at(j, l, a), at(j, l, b));
        }
        for (auto [a, b] : end.segment.cross_edges) {
          edges_.emplace_back(at(j, l, a), at(j, l + 1, b));
        }
      }
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  std::size_t at(std::size_t j, std::size_t level, std::size_t a) const {
    if (level >= depth_) return marker(j);
    return base_[j] + level * width_[j] + a;
  }
  std::size_t marker(std::size_t j) const {
    return base_[j] + depth_ * width_[j];
  }

  std::size_t boundary(Mask in) const {
    std::size_t k = 0;
    for (auto [a, b] : edges_) k += ((in >> a) ^ (in >> b)) & 1;
    return k;
  }

  bool tails_split(Mask in) const {
    bool has_in = false;
    bool has_out = false;
    for (std::size_t j = 0; j < base_.size(); ++j) {
      (((in >> marker(j)) & 1) ? has_in : has_out) = true;
    }
    return has_in && has_out;
  }

  // Explicit levels left after dropping trailing levels equal to the tail.
  std::size_t trace_depth(Mask in) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < base_.size(); ++j) {
      const bool tail = (in >> marker(j)) & 1;
      for (std::size_t l = depth_; l > d; --l) {
        bool differs = false;
        for (std::size_t a = 0; a < width_[j]; ++a) {
          if (static_cast<bool>((in >> at(j, l - 1, a)) & 1) != tail) {
            differs = true;
          }
        }
        if (differs) {
          d = l;
          break;
        }
      }
    }
    return d;
  }

  Cut to_cut(const GraphPtr& host, Mask in) const {
    const GraphComponent& c = g_.component(comp_);
    auto side = [&](std::size_t v) {
      return ((in >> v) & 1) ? Side::kIn : Side::kOut;
    };
    std::vector<Side> core;
    for (std::size_t i = 0; i < c.core.size(); ++i) core.push_back(side(i));
    std::vector<EndTrace> traces;
    for (std::size_t j = 0; j < base_.size(); ++j) {
      EndTrace t;
      for (std::size_t l = 0; l < depth_; ++l) {
        std::vector<Side> row;
        for (std::size_t a = 0; a < width_[j]; ++a) row.push_back(side(at(j, l, a)));
        t.levels.push_back(std::move(row));
      }
      t.tail = side(marker(j));
      traces.push_back(std::move(t));
    }
    return Cut(VertexSet(host, comp_, std::move(core), std::move(traces)));
  }

  std::vector<Colouring> colourings(std::size_t k_max) const {
    if (edges_.size() > kOracleMaxEdges) {
      throw Error(ErrorCode::kTooLarge,
                  "oracle window of component " + std::to_string(comp_) +
                      " has " + std::to_string(edges_.size()) +
                      " edges (limit " + std::to_string(kOracleMaxEdges) + ")");
    }
    std::vector<Colouring> out;
    const Mask limit = Mask{1} << n_;
    for (Mask in = 0; in < limit; ++in) {
      if (!tails_split(in)) continue;
      std::size_t k = boundary(in);
      if (k == 0 || k > k_max) continue;
      out.push_back({in, k, trace_depth(in)});
    }
    return out;
  }

 private:
  const EndedGraph& g_;
  std::size_t comp_;
  std::size_t depth_;
  std::size_t n_ = 0;
  std::vector<std::size_t> base_;
  std::vector<std::size_t> width_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

inline bool nested(Mask a, Mask b, Mask full) {
  return (a & b) == 0 || (a & ~b & full) == 0 || (~a & b & full) == 0 ||
         (~a & ~b & full) == 0;
}

inline bool orthogonal(Mask a, Mask b, Mask full) {
  return (a & b) == 0 && (a | b) != full;
}

}  // namespace oracle_detail

// Every cut with boundary size in [1, k_max] and trace depth at most `depth`,
// sorted like enumerate_cuts. Throws kTooLarge past kOracleMaxEdges window
// edges in some component.
inline std::vector<Cut> oracle_enumerate(const GraphPtr& g, std::size_t k_max,
                                         std::size_t depth) {
  std::vector<Cut> out;
  for (std::size_t c = 0; c < g->components().size(); ++c) {
    oracle_detail::OracleWindow w(*g, c, depth);
    for (const auto& col : w.colourings(k_max)) {
      out.push_back(w.to_cut(g, col.in));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct OracleComponent {
  std::size_t k0 = 0;
  std::map<std::string, std::size_t> degree;  // thin cut encoding -> degree
  std::set<std::string> selected;             // minimum degree cuts
  std::string tree_form;                      // canonical form, whole window
  std::string interior_tree_form;             // canonical form, interior
};

// k0, degrees, minimum-degree selection and the class tree of one component,
// computed on colourings only.
inline OracleComponent oracle_component(const GraphPtr& g, std::size_t comp,
                                        const Window& win) {
  using oracle_detail::Mask;
  oracle_detail::OracleWindow w(*g, comp, win.depth);
  const Mask full = w.full();
  OracleComponent out;
  std::vector<oracle_detail::Colouring> cols = w.colourings(w.edge_count());
  if (cols.empty()) {
    throw Error(ErrorCode::kNotMultiEnded,
                "component " + std::to_string(comp) + " has no cut");
  }
  out.k0 = cols.front().boundary;
  for (const auto& c : cols) out.k0 = std::min(out.k0, c.boundary);
  std::vector<oracle_detail::Colouring> thin;
  for (const auto& c : cols) {
    if (c.boundary == out.k0) thin.push_back(c);
  }
  std::vector<std::size_t> deg(thin.size(), 0);
  for (std::size_t i = 0; i < thin.size(); ++i) {
    for (std::size_t j = 0; j < thin.size(); ++j) {
      if (i != j && !oracle_detail::nested(thin[i].in, thin[j].in, full)) {
        ++deg[i];
      }
    }
  }
  auto interior = [&](const oracle_detail::Colouring& c) {
    return c.depth + win.margin < win.depth;
  };
  std::size_t min_deg = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < thin.size(); ++i) {
    out.degree.emplace(w.to_cut(g, thin[i].in).encoding(), deg[i]);
    if (interior(thin[i])) min_deg = std::min(min_deg, deg[i]);
  }
  std::vector<oracle_detail::Colouring> sel;
  for (std::size_t i = 0; i < thin.size(); ++i) {
    if (deg[i] == min_deg) {
      sel.push_back(thin[i]);
      out.selected.insert(w.to_cut(g, thin[i].in).encoding());
    }
  }
  // Classes: A with every inclusion-maximal member orthogonal to A.
  const std::size_t n = sel.size();
  std::vector<std::vector<std::size_t>> cls(n);
  for (std::size_t a = 0; a < n; ++a) {
    cls[a].push_back(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (!oracle_detail::orthogonal(sel[a].in, sel[b].in, full)) continue;
      bool maximal = true;
      for (std::size_t c = 0; c < n && maximal; ++c) {
        if (c != b && oracle_detail::orthogonal(sel[a].in, sel[c].in, full) &&
            (sel[c].in & sel[b].in) == sel[b].in) {
          maximal = false;
        }
      }
      if (maximal) cls[a].push_back(b);
    }
    std::sort(cls[a].begin(), cls[a].end());
  }
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::size_t> vertex_of(n);
  for (std::size_t a = 0; a < n; ++a) {
    vertex_of[a] = ids.emplace(cls[a], ids.size()).first->second;
  }
  std::vector<bool> vertex_interior(ids.size(), false);
  for (std::size_t a = 0; a < n; ++a) {
    if (interior(sel[a])) vertex_interior[vertex_of[a]] = true;
  }
  TreeEdges edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if ((sel[a].in ^ sel[b].in) == full) {
        edges.emplace_back(vertex_of[a], vertex_of[b]);
      }
    }
  }
  out.tree_form = canonical_form(ids.size(), edges);
  std::vector<std::size_t> renum(ids.size());
  std::size_t m = 0;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (vertex_interior[v]) renum[v] = m++;
  }
  TreeEdges inner;
  for (auto [a, b] : edges) {
    if (vertex_interior[a] && vertex_interior[b]) {
      inner.emplace_back(renum[a], renum[b]);
    }
  }
  out.interior_tree_form = m ? canonical_form(m, inner) : "";
  return out;
}

// Canonical forms of a structure tree, matching OracleComponent.
inline std::pair<std::string, std::string> tree_forms(const StructureTree& t) {
  TreeEdges edges;
  for (const auto& e : t.edges) edges.emplace_back(e.u, e.v);
  auto [m, inner] = t.interior_subtree();
  return {canonical_form(t.vertices.size(), edges),
          m ? canonical_form(m, inner) : ""};
}

struct OracleReport {
  bool k0_agree = true;
  bool cuts_agree = true;
  bool degrees_agree = true;
  bool selection_agree = true;
  bool tree_agree = true;
  std::vector<std::string> lines;  // each starts with AGREE or DIFF
  double millis = 0;

  bool all_agree() const {
    return k0_agree && cuts_agree && degrees_agree && selection_agree &&
           tree_agree;
  }

  std::string text(bool with_timing = false) const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    if (with_timing) {
      std::ostringstream os;
      os.precision(3);
      os << std::fixed << "time ms=" << millis << "\n";
      out += os.str();
    }
    return out;
  }
};

namespace oracle_detail {

template <class T>
std::string diff_list(const std::set<T>& a, const std::set<T>& b) {
  std::string out;
  for (const auto& x : a) {
    if (!b.count(x)) out += " -" + x;
  }
  for (const auto& x : b) {
    if (!a.count(x)) out += " +" + x;
  }
  return out;
}

}  // namespace oracle_detail

// Compares the cut miner and the structure tree against the oracle in the
// window. Stability across depths is not part of the comparison.
inline OracleReport run_oracle(const GraphPtr& g, std::size_t k_max,
                               const Window& w) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport r;
  auto line = [&](bool ok, const std::string& msg) {
    r.lines.push_back(std::string(ok ? "AGREE " : "DIFF ") + msg);
  };

  std::set<std::string> mine;
  std::set<std::string> theirs;
  for (const Cut& c : enumerate_cuts(g, k_max, w)) {
    mine.insert(std::to_string(c.component()) + ":" + c.encoding());
  }
  for (const Cut& c : oracle_enumerate(g, k_max, w.depth)) {
    theirs.insert(std::to_string(c.component()) + ":" + c.encoding());
  }
  r.cuts_agree = mine == theirs;
  line(r.cuts_agree, "cuts kmax=" + std::to_string(k_max) + " depth=" +
                         std::to_string(w.depth) + " count=" +
                         std::to_string(mine.size()) +
                         (r.cuts_agree ? "" : " oracle=" +
                                                  std::to_string(theirs.size()) +
                                                  oracle_detail::diff_list(mine, theirs)));

  Analysis a = analyze(g, w, {.check_stability = false});
  for (const auto& comp : a.components) {
    const std::string tag = "comp=" + std::to_string(comp.component);
    OracleComponent o = oracle_component(g, comp.component, w);

    const bool k0_ok = comp.k0 == o.k0;
    r.k0_agree = r.k0_agree && k0_ok;
    line(k0_ok, "k0 " + tag + " value=" + std::to_string(comp.k0) +
                    (k0_ok ? "" : " oracle=" + std::to_string(o.k0)));

    std::map<std::string, std::size_t> deg;
    for (std::size_t i = 0; i < comp.thin.size(); ++i) {
      deg.emplace(comp.thin[i].encoding(), comp.degree[i]);
    }
    const bool deg_ok = deg == o.degree;
    r.degrees_agree = r.degrees_agree && deg_ok;
    std::string deg_diff;
    if (!deg_ok) {
      for (const auto& [enc, d] : deg) {
        auto it = o.degree.find(enc);
        if (it == o.degree.end() || it->second != d) {
          deg_diff += " " + enc + ":" + std::to_string(d) + "/" +
                      (it == o.degree.end() ? "-" : std::to_string(it->second));
        }
      }
    }
    line(deg_ok, "degrees " + tag + " thin=" + std::to_string(deg.size()) +
                     deg_diff);

    std::set<std::string> sel;
    for (const Cut& c : comp.selected_cuts()) sel.insert(c.encoding());
    const bool sel_ok = sel == o.selected;
    r.selection_agree = r.selection_agree && sel_ok;
    line(sel_ok, "selection " + tag + " size=" + std::to_string(sel.size()) +
                     (sel_ok ? "" : oracle_detail::diff_list(sel, o.selected)));

    StructureTree t = build_structure_tree(comp.selected_cuts(), w);
    auto [form, inner] = tree_forms(t);
    const bool tree_ok = form == o.tree_form && inner == o.interior_tree_form;
    r.tree_agree = r.tree_agree && tree_ok;
    line(tree_ok, "tree " + tag + " vertices=" +
                      std::to_string(t.vertices.size()) + " interior=" +
                      std::to_string(t.interior_vertex_count()));
  }
  r.millis = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

}  // namespace endtree

#endif  // ENDTREE_ORACLE_HPP_
