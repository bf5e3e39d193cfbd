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

// Orthogonality, domination, maximally-orthogonal classes, bases and the
// tree on classes of a nested collection of sets.
//
// The algorithms are written once against the SetAlgebra concept and are
// used both for finite ground sets (GroundSet, below) and for cuts of
// ended graphs (see ended_graph.hpp). A collection is always finite here,
// so every collection is chain-vanishing: there are no infinite strictly
// monotone sequences to worry about.

#ifndef ENDTREE_NESTED_SETS_HPP_
#define ENDTREE_NESTED_SETS_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <istream>
#include <iterator>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endtree/error.hpp"

namespace endtree {

// A value type modelling a subset of some ambient set. The operations are
// found by argument-dependent lookup:
//   complement(a)      the complement within the ambient set
//   is_disjoint(a, b)  a ∩ b = ∅
//   includes(a, b)     a ⊇ b
//   is_empty(a)
template <class T>
concept SetAlgebra = std::copyable<T> && std::totally_ordered<T> &&
    requires(const T& a, const T& b) {
      { complement(a) } -> std::convertible_to<T>;
      { is_disjoint(a, b) } -> std::convertible_to<bool>;
      { includes(a, b) } -> std::convertible_to<bool>;
      { is_empty(a) } -> std::convertible_to<bool>;
    };

enum class Domination { kNo, kExact, kComplement };

inline std::string_view to_string(Domination d) {
  switch (d) {
    case Domination::kNo: return "No";
    case Domination::kExact: return "Exact";
    case Domination::kComplement: return "Complement";
  }
  return "?";
}

// A ⊥ B: disjoint and not complementary.
template <SetAlgebra T>
bool orthogonal(const T& a, const T& b) {
  return is_disjoint(a, b) && !(a == complement(b));
}

template <SetAlgebra T>
Domination dominates(const T& a, const T& b) {
  if (includes(a, b)) return Domination::kExact;
  if (includes(a, complement(b))) return Domination::kComplement;
  return Domination::kNo;
}

// Some corner A^i ∩ B^j is empty.
template <SetAlgebra T>
bool nested(const T& a, const T& b) {
  return is_disjoint(a, b) || includes(b, a) || includes(a, b) ||
         includes(a, complement(b));
}

// ---------------------------------------------------------------------------
// SetSystem: a finite collection with precomputed pairwise relations.

template <SetAlgebra T>
class SetSystem {
 public:
  SetSystem() = default;

  explicit SetSystem(std::vector<T> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (is_empty(sets_[i])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "set systems hold nonempty sets only");
      }
      if (i > 0 && sets_[i - 1] == sets_[i]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate set in set system");
      }
    }
    const std::size_t n = sets_.size();
    disjoint_.assign(n * n, 0);
    includes_.assign(n * n, 0);
    covers_.assign(n * n, 0);
    complement_.assign(n, std::nullopt);
    std::vector<T> complements;
    complements.reserve(n);
    for (const T& s : sets_) complements.push_back(complement(s));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        disjoint_[i * n + j] = i != j && is_disjoint(sets_[i], sets_[j]);
        includes_[i * n + j] = (i == j) || includes(sets_[i], sets_[j]);
        covers_[i * n + j] = includes(sets_[i], complements[j]);
      }
      auto it = std::lower_bound(sets_.begin(), sets_.end(), complements[i]);
      if (it != sets_.end() && *it == complements[i]) {
        complement_[i] = static_cast<std::size_t>(it - sets_.begin());
      }
    }
  }

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const T& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<T>& sets() const { return sets_; }

  std::optional<std::size_t> find(const T& s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it == sets_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - sets_.begin());
  }

  std::size_t index_of(const T& s) const {
    auto i = find(s);
    if (!i) throw Error(ErrorCode::kNotInSystem, "set is not a member");
    return *i;
  }

  bool disjoint(std::size_t i, std::size_t j) const {
    return disjoint_[i * size() + j];
  }
  // sets_[i] ⊇ sets_[j]
  bool includes_at(std::size_t i, std::size_t j) const {
    return includes_[i * size() + j];
  }
  // sets_[i] ⊇ complement(sets_[j])
  bool covers(std::size_t i, std::size_t j) const {
    return covers_[i * size() + j];
  }
  std::optional<std::size_t> complement_index(std::size_t i) const {
    return complement_[i];
  }

  bool orthogonal(std::size_t i, std::size_t j) const {
    return disjoint(i, j) && complement_[j] != i;
  }
  Domination dominates(std::size_t i, std::size_t j) const {
    if (includes_at(i, j)) return Domination::kExact;
    if (covers(i, j)) return Domination::kComplement;
    return Domination::kNo;
  }
  bool nested(std::size_t i, std::size_t j) const {
    return disjoint(i, j) || includes_at(i, j) || includes_at(j, i) ||
           covers(i, j);
  }

  std::optional<std::pair<std::size_t, std::size_t>> first_non_nested_pair()
      const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (!nested(i, j)) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }
  bool is_nested() const { return !first_non_nested_pair().has_value(); }

  bool is_self_dual() const {
    return std::all_of(complement_.begin(), complement_.end(),
                       [](const auto& c) { return c.has_value(); });
  }

  // [A]_S: A together with the inclusion-maximal members orthogonal to A.
  // Sorted indices.
  std::vector<std::size_t> max_orthogonal_class(std::size_t a) const {
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < size(); ++j) {
      if (orthogonal(a, j)) candidates.push_back(j);
    }
    std::vector<std::size_t> result{a};
    for (std::size_t j : candidates) {
      bool maximal = std::none_of(
          candidates.begin(), candidates.end(),
          [&](std::size_t k) { return k != j && includes_at(k, j); });
      if (maximal) result.push_back(j);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  // Orthogonal and dominates every member.
  bool is_basis(std::span<const std::size_t> basis) const {
    for (std::size_t x = 0; x < basis.size(); ++x) {
      for (std::size_t y = x + 1; y < basis.size(); ++y) {
        if (basis[x] == basis[y] || !orthogonal(basis[x], basis[y])) {
          return false;
        }
      }
    }
    for (std::size_t j = 0; j < size(); ++j) {
      bool dominated =
          std::any_of(basis.begin(), basis.end(), [&](std::size_t b) {
            return dominates(b, j) != Domination::kNo;
          });
      if (!dominated) return false;
    }
    return true;
  }

  // A ∼ B iff A ∈ [B].
  bool sim(std::size_t a, std::size_t b) const {
    if (a == b) return true;
    auto cls = max_orthogonal_class(b);
    return std::binary_search(cls.begin(), cls.end(), a);
  }

 private:
  std::vector<T> sets_;
  std::vector<char> disjoint_;
  std::vector<char> includes_;
  std::vector<char> covers_;
  std::vector<std::optional<std::size_t>> complement_;
};

// ---------------------------------------------------------------------------
// Classes, bases and the tree.

struct ClassPartition {
  std::vector<std::vector<std::size_t>> classes;  // sorted, ordered by min
  std::vector<std::size_t> class_of;              // per member of the system
};

// Partition of a nested self-dual system into ∼-classes. Without
// complements ∼ need not be symmetric, e.g. {a}, {a,b}, {b}, {c} in
// {a,b,c,d}: {c} ∈ [{a}] but [{c}] = {{c}, {a,b}}.
template <SetAlgebra T>
ClassPartition class_partition(const SetSystem<T>& system) {
  if (auto bad = system.first_non_nested_pair()) {
    throw Error(ErrorCode::kNotNested,
                "members " + std::to_string(bad->first) + " and " +
                    std::to_string(bad->second) + " are not nested");
  }
  if (!system.is_self_dual()) {
    throw Error(ErrorCode::kNotSelfDual,
                "∼-classes need a system closed under complement");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ClassPartition partition;
  partition.class_of.assign(system.size(), kUnset);
  for (std::size_t a = 0; a < system.size(); ++a) {
    auto cls = system.max_orthogonal_class(a);
    if (partition.class_of[a] != kUnset) {
      if (partition.classes[partition.class_of[a]] != cls) {
        throw Error(ErrorCode::kInvariantViolation,
                    "classes of a nested system overlap without coinciding");
      }
      continue;
    }
    const std::size_t id = partition.classes.size();
    for (std::size_t m : cls) {
      if (partition.class_of[m] != kUnset) {
        throw Error(ErrorCode::kInvariantViolation,
                    "two distinct classes share a member");
      }
      partition.class_of[m] = id;
    }
    partition.classes.push_back(std::move(cls));
  }
  return partition;
}

// Every basis of a nested finite system. A basis is the class of each of
// its members, so the bases are the classes that pass is_basis; for
// self-dual systems that is every class, and they partition the system.
template <SetAlgebra T>
std::vector<std::vector<std::size_t>> enumerate_bases(
    const SetSystem<T>& system) {
  if (auto bad = system.first_non_nested_pair()) {
    throw Error(ErrorCode::kNotNested,
                "members " + std::to_string(bad->first) + " and " +
                    std::to_string(bad->second) + " are not nested");
  }
  std::vector<std::vector<std::size_t>> bases;
  for (std::size_t a = 0; a < system.size(); ++a) {
    auto cls = system.max_orthogonal_class(a);
    if (system.is_basis(cls)) {
      bases.push_back(std::move(cls));
    } else if (system.is_self_dual()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "a class of a nested self-dual system is not a basis");
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

struct AbstractTree {
  struct Edge {
    std::size_t u = 0;    // class of `set`
    std::size_t v = 0;    // class of the complement of `set`
    std::size_t set = 0;  // the smaller index of the complement pair
  };
  ClassPartition partition;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return partition.classes.size(); }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertex_count());
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

// Throws kInvariantViolation naming the first broken tree axiom.
inline void verify_tree(const AbstractTree& tree) {
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : tree.edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvariantViolation,
                  "loop at class " + std::to_string(e.u));
    }
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::kInvariantViolation, "multi-edge in class graph");
  }
  detail::DisjointSets dsu(tree.vertex_count());
  for (const auto& e : tree.edges) {
    if (!dsu.unite(e.u, e.v)) {
      throw Error(ErrorCode::kInvariantViolation, "class graph has a cycle");
    }
  }
  for (std::size_t v = 1; v < tree.vertex_count(); ++v) {
    if (dsu.find(v) != dsu.find(0)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "class graph is disconnected");
    }
  }
}

// Vertices are ∼-classes, with one edge per complement pair {A, A^c}.
// Requires a nested self-dual system; the result is verified to be a tree.
template <SetAlgebra T>
AbstractTree build_abstract_tree(const SetSystem<T>& system) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (!system.complement_index(i)) {
      throw Error(ErrorCode::kNotSelfDual,
                  "member " + std::to_string(i) + " has no complement");
    }
  }
  AbstractTree tree;
  tree.partition = class_partition(system);
  for (std::size_t i = 0; i < system.size(); ++i) {
    std::size_t c = *system.complement_index(i);
    if (i < c) {
      tree.edges.push_back({tree.partition.class_of[i],
                            tree.partition.class_of[c], i});
    }
  }
  verify_tree(tree);
  return tree;
}

enum class PathKind { kNotAPath, kBacktracks, kStrictlyIncreasing };

inline std::string_view to_string(PathKind k) {
  switch (k) {
    case PathKind::kNotAPath: return "NotAPath";
    case PathKind::kBacktracks: return "Backtracks";
    case PathKind::kStrictlyIncreasing: return "StrictlyIncreasing";
  }
  return "?";
}

// Classifies a sequence of members: it represents a path when consecutive
// entries satisfy A_{n-1} ∼ A_n^c; it backtracks when A_{n-1}^c = A_n for
// some n. A non-backtracking representation must be strictly increasing,
// which is checked and reported as kInvariantViolation if it fails.
template <SetAlgebra T>
PathKind check_path_representation(const SetSystem<T>& system,
                                   std::span<const std::size_t> seq) {
  for (std::size_t n = 1; n < seq.size(); ++n) {
    auto c = system.complement_index(seq[n]);
    if (!c || !system.sim(seq[n - 1], *c)) return PathKind::kNotAPath;
  }
  for (std::size_t n = 1; n < seq.size(); ++n) {
    if (system.complement_index(seq[n - 1]) == seq[n]) {
      return PathKind::kBacktracks;
    }
  }
  for (std::size_t n = 1; n < seq.size(); ++n) {
    if (seq[n - 1] == seq[n] || !system.includes_at(seq[n], seq[n - 1])) {
      throw Error(ErrorCode::kInvariantViolation,
                  "non-backtracking path is not strictly increasing");
    }
  }
  return PathKind::kStrictlyIncreasing;
}

// ---------------------------------------------------------------------------
// Finite ground sets.

class Universe {
 public:
  static std::shared_ptr<const Universe> create(
      std::vector<std::string> elements) {
    if (elements.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "universe must be nonempty");
    }
    auto u = std::shared_ptr<Universe>(new Universe());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!u->index_.emplace(elements[i], i).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate universe element '" + elements[i] + "'");
      }
    }
    u->elements_ = std::move(elements);
    return u;
  }

  std::size_t size() const { return elements_.size(); }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.elements_ == b.elements_;
  }

 private:
  Universe() = default;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A subset of a Universe, stored as a sorted list of element indices.
class GroundSet {
 public:
  GroundSet() = default;

  GroundSet(std::shared_ptr<const Universe> universe,
            std::vector<std::size_t> members)
      : universe_(std::move(universe)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (!members_.empty() && members_.back() >= universe_->size()) {
      throw Error(ErrorCode::kInvalidArgument, "element outside universe");
    }
  }

  static GroundSet from_names(std::shared_ptr<const Universe> universe,
                              const std::vector<std::string>& names) {
    std::vector<std::size_t> idx;
    for (const auto& n : names) {
      auto i = universe->find(n);
      if (!i) {
        throw Error(ErrorCode::kInvalidArgument,
                    "'" + n + "' is not in the universe");
      }
      idx.push_back(*i);
    }
    return GroundSet(std::move(universe), std::move(idx));
  }

  const std::shared_ptr<const Universe>& universe() const { return universe_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      out += universe_->element(members_[i]);
    }
    return out + "}";
  }

  friend bool same_universe(const GroundSet& a, const GroundSet& b) {
    return a.universe_ == b.universe_ ||
           (a.universe_ && b.universe_ && *a.universe_ == *b.universe_);
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.members_ == b.members_ && same_universe(a, b);
  }
  friend bool operator<(const GroundSet& a, const GroundSet& b) {
    if (a.members_ != b.members_) return a.members_ < b.members_;
    if (same_universe(a, b)) return false;
    return a.universe_->elements() < b.universe_->elements();
  }
  friend bool operator>(const GroundSet& a, const GroundSet& b) {
    return b < a;
  }
  friend bool operator<=(const GroundSet& a, const GroundSet& b) {
    return !(b < a);
  }
  friend bool operator>=(const GroundSet& a, const GroundSet& b) {
    return !(a < b);
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<std::size_t> members_;
};

namespace detail {
inline void require_same_universe(const GroundSet& a, const GroundSet& b) {
  if (!same_universe(a, b)) {
    throw Error(ErrorCode::kUniverseMismatch,
                a.to_string() + " and " + b.to_string() +
                    " live in different universes");
  }
}
}  // namespace detail

inline bool is_empty(const GroundSet& a) { return a.members().empty(); }

inline GroundSet complement(const GroundSet& a) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.universe()->size(); ++i) {
    if (k < a.size() && a.members()[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return GroundSet(a.universe(), std::move(out));
}

inline GroundSet intersection(const GroundSet& a, const GroundSet& b) {
  detail::require_same_universe(a, b);
  std::vector<std::size_t> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return GroundSet(a.universe(), std::move(out));
}

inline bool is_disjoint(const GroundSet& a, const GroundSet& b) {
  return is_empty(intersection(a, b));
}

inline bool includes(const GroundSet& a, const GroundSet& b) {
  detail::require_same_universe(a, b);
  return std::includes(a.members().begin(), a.members().end(),
                       b.members().begin(), b.members().end());
}

// A∩B, A∩B^c, A^c∩B, A^c∩B^c.
inline std::array<GroundSet, 4> corners(const GroundSet& a,
                                        const GroundSet& b) {
  detail::require_same_universe(a, b);
  GroundSet ac = complement(a);
  GroundSet bc = complement(b);
  return {intersection(a, b), intersection(a, bc), intersection(ac, b),
          intersection(ac, bc)};
}

static_assert(SetAlgebra<GroundSet>);

// ---------------------------------------------------------------------------
// Set-system text format:
//   universe: e1 e2 ...
//   set: e_i ...
// Blank lines and '#' comments are ignored.

struct ParsedSetSystem {
  std::shared_ptr<const Universe> universe;
  std::vector<GroundSet> sets;  // in file order

  SetSystem<GroundSet> system() const { return SetSystem<GroundSet>(sets); }
};

inline ParsedSetSystem parse_set_system(std::istream& in) {
  ParsedSetSystem out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto colon = line.find(':');
    std::istringstream rest(colon == std::string::npos ? line
                                                       : line.substr(colon + 1));
    std::string key = colon == std::string::npos ? line : line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t\r"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    if (key.empty() && colon == std::string::npos) continue;
    std::vector<std::string> tokens{std::istream_iterator<std::string>(rest),
                                    std::istream_iterator<std::string>()};
    const std::string where = "line " + std::to_string(lineno);
    if (key == "universe") {
      if (out.universe) {
        throw Error(ErrorCode::kParse, where + ": second universe line");
      }
      out.universe = Universe::create(std::move(tokens));
    } else if (key == "set") {
      if (!out.universe) {
        throw Error(ErrorCode::kParse, where + ": set before universe");
      }
      if (tokens.empty()) {
        throw Error(ErrorCode::kParse, where + ": empty set");
      }
      try {
        out.sets.push_back(GroundSet::from_names(out.universe, tokens));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, where + ": " + e.what());
      }
    } else {
      throw Error(ErrorCode::kParse, where + ": unknown directive '" + key + "'");
    }
  }
  if (!out.universe) throw Error(ErrorCode::kParse, "missing universe line");
  return out;
}

inline std::string write_set_system(const Universe& universe,
                                    std::span<const GroundSet> sets) {
  std::string out = "universe:";
  for (const auto& e : universe.elements()) out += " " + e;
  out += "\n";
  for (const auto& s : sets) {
    out += "set:";
    for (std::size_t m : s.members()) out += " " + universe.element(m);
    out += "\n";
  }
  return out;
}

}  // namespace endtree

#endif  // ENDTREE_NESTED_SETS_HPP_
