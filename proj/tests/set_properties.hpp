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

// Property sweep over finite set systems. Every library answer is compared
// with a bitmask reimplementation on ground sets of at most 12 points.

#ifndef ENDTREE_TESTS_SET_PROPERTIES_HPP_
#define ENDTREE_TESTS_SET_PROPERTIES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "endtree/generators.hpp"
#include "endtree/nested_sets.hpp"
#include "endtree/tree_isomorphism.hpp"

namespace endtree::testing {

using Mask = std::uint32_t;

struct MaskSystem {
  std::size_t n = 0;         // ground set {0..n-1}
  std::vector<Mask> sets;    // distinct, nonempty, proper
  std::string origin;
};

namespace props {

inline Mask full(std::size_t n) { return (Mask{1} << n) - 1; }

inline bool m_orth(Mask a, Mask b, Mask all) {
  return (a & b) == 0 && a != (all ^ b);
}
inline bool m_nested(Mask a, Mask b, Mask all) {
  const Mask ac = all ^ a;
  const Mask bc = all ^ b;
  return !(a & b) || !(a & bc) || !(ac & b) || !(ac & bc);
}
inline Domination m_dom(Mask a, Mask b, Mask all) {
  if ((a & b) == b) return Domination::kExact;
  if ((a & (all ^ b)) == (all ^ b)) return Domination::kComplement;
  return Domination::kNo;
}

// [A]: A and the inclusion-maximal members orthogonal to A, as indices.
inline std::vector<std::size_t> m_class(const MaskSystem& s, std::size_t a) {
  const Mask all = full(s.n);
  std::vector<std::size_t> out{a};
  for (std::size_t j = 0; j < s.sets.size(); ++j) {
    if (!m_orth(s.sets[a], s.sets[j], all)) continue;
    bool maximal = true;
    for (std::size_t k = 0; k < s.sets.size(); ++k) {
      if (k != j && m_orth(s.sets[a], s.sets[k], all) &&
          (s.sets[k] & s.sets[j]) == s.sets[j]) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool m_is_basis(const MaskSystem& s, const std::vector<std::size_t>& b) {
  const Mask all = full(s.n);
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = x + 1; y < b.size(); ++y) {
      if (!m_orth(s.sets[b[x]], s.sets[b[y]], all)) return false;
    }
  }
  for (Mask m : s.sets) {
    if (std::none_of(b.begin(), b.end(), [&](std::size_t i) {
          return m_dom(s.sets[i], m, all) != Domination::kNo;
        })) {
      return false;
    }
  }
  return true;
}

inline std::shared_ptr<const Universe> universe(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return Universe::create(names);
}

inline GroundSet to_ground(const std::shared_ptr<const Universe>& u, Mask m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < u->size(); ++i) {
    if (m >> i & 1) idx.push_back(i);
  }
  return GroundSet(u, idx);
}

}  // namespace props

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && failures++ == 0) first_failure = describe();
  }
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  std::size_t systems = 0;
  std::size_t self_dual_systems = 0;

  PropertyResult& get(const std::string& name) {
    for (auto& r : results) {
      if (r.name == name) return r;
    }
    results.push_back({name, 0, 0, {}});
    return results.back();
  }
  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) {
      return r.failures == 0 && r.checked > 0;
    });
  }
};

inline std::string describe(const MaskSystem& s) {
  std::string out = s.origin + " n=" + std::to_string(s.n) + " {";
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.sets[i]);
  }
  return out + "}";
}

// Checks one nested system. `exhaustive_bases` also enumerates every
// subfamily to confirm the classes are the only bases.
inline void check_system(const MaskSystem& input, PropertyReport& report,
                         bool exhaustive_bases) {
  using namespace props;
  const Mask all = full(input.n);
  auto u = universe(input.n);
  std::vector<GroundSet> input_sets;
  for (Mask x : input.sets) input_sets.push_back(to_ground(u, x));
  SetSystem<GroundSet> sys(input_sets);
  // Index in the library's member order.
  MaskSystem s{input.n, {}, input.origin};
  for (const GroundSet& g : sys.sets()) {
    Mask x = 0;
    for (std::size_t i : g.members()) x |= Mask{1} << i;
    s.sets.push_back(x);
  }
  const std::vector<GroundSet>& ground = sys.sets();
  const std::size_t m = s.sets.size();
  auto where = [&] { return describe(s); };
  ++report.systems;

  auto& nested_r = report.get("nestedness agrees with corners");
  bool all_nested = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      all_nested = all_nested && m_nested(s.sets[i], s.sets[j], all);
    }
  }
  nested_r.check(sys.is_nested() == all_nested, where);
  if (!all_nested) return;

  auto& orth_r = report.get("orthogonality symmetric, excludes domination");
  auto& alt_r = report.get("nestedness alternative");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const GroundSet& a = ground[i];
      const GroundSet& b = ground[j];
      const bool o = orthogonal(a, b);
      bool ok = o == orthogonal(b, a) &&
                o == m_orth(s.sets[i], s.sets[j], all) &&
                dominates(a, b) == m_dom(s.sets[i], s.sets[j], all);
      if (o) {
        ok = ok && dominates(a, b) == Domination::kNo &&
             dominates(b, a) == Domination::kNo;
      }
      orth_r.check(ok, where);
      alt_r.check(dominates(a, b) != Domination::kNo || orthogonal(a, b) ||
                      orthogonal(a, complement(b)),
                  where);
    }
  }

  auto& class_r = report.get("class is the maximal orthogonal family");
  auto& cover_r = report.get("orthogonal member lies under a class member");
  std::vector<std::vector<std::size_t>> classes(m);
  for (std::size_t a = 0; a < m; ++a) {
    classes[a] = m_class(s, a);
    bool ok = sys.max_orthogonal_class(a) == classes[a];
    for (std::size_t x : classes[a]) {
      for (std::size_t y : classes[a]) {
        if (x != y) ok = ok && m_orth(s.sets[x], s.sets[y], all);
      }
    }
    class_r.check(ok, where);
    for (std::size_t b = 0; b < m; ++b) {
      if (!m_orth(s.sets[a], s.sets[b], all)) continue;
      cover_r.check(std::any_of(classes[a].begin(), classes[a].end(),
                                [&](std::size_t c) {
                                  return (s.sets[c] & s.sets[b]) == s.sets[b];
                                }),
                    where);
    }
  }

  auto& bases_r = report.get("bases are exactly the classes that are bases");
  std::vector<std::vector<std::size_t>> basis_classes;
  for (std::size_t a = 0; a < m; ++a) {
    if (m_is_basis(s, classes[a])) basis_classes.push_back(classes[a]);
  }
  std::sort(basis_classes.begin(), basis_classes.end());
  basis_classes.erase(
      std::unique(basis_classes.begin(), basis_classes.end()),
      basis_classes.end());
  bases_r.check(enumerate_bases(sys) == basis_classes, where);
  if (exhaustive_bases && m <= 14) {
    auto& unique_r = report.get("no other subfamily is a basis");
    std::vector<std::vector<std::size_t>> found;
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << m); ++pick) {
      std::vector<std::size_t> b;
      for (std::size_t i = 0; i < m; ++i) {
        if (pick >> i & 1) b.push_back(i);
      }
      if (m_is_basis(s, b)) found.push_back(b);
    }
    std::sort(found.begin(), found.end());
    unique_r.check(found == basis_classes, where);
  }

  if (m == 0 || !sys.is_self_dual()) return;
  ++report.self_dual_systems;

  auto& sim_r = report.get("sim is an equivalence");
  for (std::size_t a = 0; a < m; ++a) {
    bool ok = sys.sim(a, a);
    for (std::size_t b = 0; b < m; ++b) {
      ok = ok && sys.sim(a, b) == sys.sim(b, a);
      for (std::size_t c = 0; c < m && ok; ++c) {
        if (sys.sim(a, b) && sys.sim(b, c)) ok = sys.sim(a, c);
      }
    }
    sim_r.check(ok, where);
  }

  auto& basis_r = report.get("classes are bases, pairwise disjoint");
  std::vector<std::vector<std::size_t>> distinct = classes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  bool ok = true;
  std::vector<std::size_t> owner(m, m);
  for (std::size_t c = 0; c < distinct.size(); ++c) {
    ok = ok && sys.is_basis(distinct[c]) && m_is_basis(s, distinct[c]);
    for (std::size_t x : distinct[c]) {
      ok = ok && owner[x] == m;
      owner[x] = c;
    }
  }
  auto lib = enumerate_bases(sys);
  std::sort(lib.begin(), lib.end());
  ok = ok && lib == distinct;
  basis_r.check(ok, where);

  auto& tree_r = report.get("class graph is a tree");
  auto& path_r = report.get("non-backtracking paths strictly increase");
  AbstractTree t;
  try {
    t = build_abstract_tree(sys);
  } catch (const Error& e) {
    tree_r.check(false, [&] { return where() + " " + e.what(); });
    return;
  }
  {
    TreeEdges edges;
    bool tree_ok = t.vertex_count() == distinct.size() &&
                   t.edges.size() * 2 == m;
    for (const auto& e : t.edges) {
      tree_ok = tree_ok && e.u != e.v;
      edges.emplace_back(e.u, e.v);
    }
    try {
      canonical_form(t.vertex_count(), edges);
    } catch (const Error&) {
      tree_ok = false;
    }
    tree_r.check(tree_ok, where);
  }
  // Sequences with A_{k-1} ∼ A_k^c and no immediate reversal, length <= 6.
  std::vector<std::size_t> comp(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (s.sets[j] == (all ^ s.sets[i])) comp[i] = j;
    }
  }
  std::vector<std::size_t> seq;
  std::function<void()> extend = [&] {
    if (seq.size() >= 2) {
      bool increasing = true;
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const Mask lo = s.sets[seq[k - 1]];
        const Mask hi = s.sets[seq[k]];
        increasing = increasing && lo != hi && (hi & lo) == lo;
      }
      PathKind kind = PathKind::kNotAPath;
      try {
        kind = check_path_representation(sys, std::span<const std::size_t>(seq));
      } catch (const Error&) {
        kind = PathKind::kNotAPath;
      }
      path_r.check(increasing && kind == PathKind::kStrictlyIncreasing, where);
    }
    if (seq.size() == 6) return;
    const std::size_t last = seq.back();
    for (std::size_t c : classes[last]) {
      const std::size_t next = comp[c];
      if (next == comp[last]) continue;
      seq.push_back(next);
      extend();
      seq.pop_back();
    }
  };
  for (std::size_t a = 0; a < m; ++a) {
    seq = {a};
    extend();
  }
}

// Every nested family of nonempty proper subsets of {0..n-1} with at most
// `max_sets` members.
inline void for_each_nested_family(
    std::size_t n, std::size_t max_sets,
    const std::function<void(const std::vector<Mask>&)>& fn) {
  const Mask all = props::full(n);
  std::vector<Mask> pool;
  for (Mask x = 1; x < all; ++x) pool.push_back(x);
  std::vector<Mask> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(cur);
    if (cur.size() == max_sets) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (std::all_of(cur.begin(), cur.end(), [&](Mask y) {
            return props::m_nested(pool[i], y, all);
          })) {
        cur.push_back(pool[i]);
        rec(i + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
}

// Every nested family closed under complement with at most `max_sets`
// members.
inline void for_each_self_dual_family(
    std::size_t n, std::size_t max_sets,
    const std::function<void(const std::vector<Mask>&)>& fn) {
  const Mask all = props::full(n);
  std::vector<Mask> pairs;  // representatives not containing point n-1
  for (Mask x = 1; x < all; ++x) {
    if (!(x >> (n - 1) & 1)) pairs.push_back(x);
  }
  std::vector<Mask> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) fn(cur);
    if (cur.size() + 2 > max_sets) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      if (std::all_of(cur.begin(), cur.end(), [&](Mask y) {
            return props::m_nested(pairs[i], y, all);
          })) {
        cur.push_back(pairs[i]);
        cur.push_back(all ^ pairs[i]);
        rec(i + 1);
        cur.pop_back();
        cur.pop_back();
      }
    }
  };
  rec(0);
}

struct SweepOptions {
  std::size_t max_sets = 12;
  std::size_t exhaustive_all_n = 4;        // all nested families up to here
  std::size_t exhaustive_self_dual_n = 6;  // self-dual families up to here
  std::size_t random_per_n = 3000;         // random nested, n = 5 and 6
  std::size_t trees = 100;                 // edge-component systems
};

inline PropertyReport run_set_properties(const SweepOptions& opt = {}) {
  PropertyReport report;
  for (std::size_t n = 1; n <= opt.exhaustive_all_n; ++n) {
    for_each_nested_family(n, opt.max_sets, [&](const std::vector<Mask>& f) {
      check_system({n, f, "all"}, report, true);
    });
  }
  for (std::size_t n = opt.exhaustive_all_n + 1;
       n <= opt.exhaustive_self_dual_n; ++n) {
    for_each_self_dual_family(n, opt.max_sets,
                              [&](const std::vector<Mask>& f) {
                                check_system({n, f, "self-dual"}, report, true);
                              });
  }
  std::mt19937_64 rng(20261016);
  for (std::size_t n = 5; n <= 6; ++n) {
    const Mask all = props::full(n);
    std::vector<Mask> pool;
    for (Mask x = 1; x < all; ++x) pool.push_back(x);
    for (std::size_t r = 0; r < opt.random_per_n; ++r) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t target = 1 + rng() % opt.max_sets;
      std::vector<Mask> f;
      for (Mask x : pool) {
        if (f.size() == target) break;
        if (std::all_of(f.begin(), f.end(), [&](Mask y) {
              return props::m_nested(x, y, all);
            })) {
          f.push_back(x);
        }
      }
      check_system({n, f, "random"}, report, true);
    }
  }
  auto& recovery = report.get("edge-component systems recover the tree");
  for (std::uint64_t seed = 0; seed < opt.trees; ++seed) {
    const std::size_t n = 2 + seed % 11;
    FiniteTree t = make_finite_tree(n, seed);
    ParsedSetSystem parsed = edge_component_system(t);
    MaskSystem ms{n, {}, "tree seed=" + std::to_string(seed)};
    for (const GroundSet& g : parsed.sets) {
      Mask x = 0;
      for (std::size_t i : g.members()) x |= Mask{1} << i;
      ms.sets.push_back(x);
    }
    std::sort(ms.sets.begin(), ms.sets.end());
    ms.sets.erase(std::unique(ms.sets.begin(), ms.sets.end()), ms.sets.end());
    check_system(ms, report, false);
    AbstractTree built = build_abstract_tree(parsed.system());
    TreeEdges edges;
    for (const auto& e : built.edges) edges.emplace_back(e.u, e.v);
    recovery.check(trees_isomorphic(built.vertex_count(), edges, t.n, t.edges),
                   [&] { return ms.origin; });
    // Dropping one edge gives a forest; the components left by removing
    // one more edge still form a nested system.
    if (t.edges.size() >= 2) {
      TreeEdges forest = t.edges;
      forest.erase(forest.begin() +
                   static_cast<std::ptrdiff_t>(seed % forest.size()));
      MaskSystem fs{n, {}, "forest seed=" + std::to_string(seed)};
      for (std::size_t cut = 0; cut < forest.size(); ++cut) {
        for (std::size_t side : {forest[cut].first, forest[cut].second}) {
          Mask reach = Mask{1} << side;
          for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t k = 0; k < forest.size(); ++k) {
              if (k == cut) continue;
              const Mask a = Mask{1} << forest[k].first;
              const Mask b = Mask{1} << forest[k].second;
              if (((reach & a) != 0) != ((reach & b) != 0)) {
                reach |= a | b;
                grew = true;
              }
            }
          }
          fs.sets.push_back(reach);
        }
      }
      std::sort(fs.sets.begin(), fs.sets.end());
      fs.sets.erase(std::unique(fs.sets.begin(), fs.sets.end()),
                    fs.sets.end());
      check_system(fs, report, false);
    }
  }
  return report;
}

}  // namespace endtree::testing

#endif  // ENDTREE_TESTS_SET_PROPERTIES_HPP_
