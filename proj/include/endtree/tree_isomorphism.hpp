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

// Canonical forms of unrooted finite trees (AHU encoding rooted at the
// center).

#ifndef ENDTREE_TREE_ISOMORPHISM_HPP_
#define ENDTREE_TREE_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "endtree/error.hpp"

namespace endtree {

using TreeEdges = std::vector<std::pair<std::size_t, std::size_t>>;

namespace detail {

inline std::vector<std::vector<std::size_t>> tree_adjacency(
    std::size_t n, const TreeEdges& edges) {
  if (n == 0 || edges.size() + 1 != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a tree: " + std::to_string(n) + " vertices, " +
                    std::to_string(edges.size()) + " edges");
  }
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) {
      throw Error(ErrorCode::kInvalidArgument, "bad tree edge");
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::kInvalidArgument, "not a tree: disconnected");
  }
  return adj;
}

inline std::vector<std::size_t> tree_centers(
    const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : leaves) {
      for (std::size_t w : adj[leaf]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

inline std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj,
                               std::size_t root) {
  // Iterative post-order so deep paths do not exhaust the stack.
  const std::size_t n = adj.size();
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t w : adj[v]) {
      if (parent[w] == n) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "not a tree: disconnected");
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    code[v] = "(";
    for (auto& k : kids) code[v] += k;
    code[v] += ")";
    kids = {};
    if (v != root) child_codes[parent[v]].push_back(std::move(code[v]));
  }
  return code[root];
}

}  // namespace detail

// Equal for two trees iff they are isomorphic.
inline std::string canonical_form(std::size_t n, const TreeEdges& edges) {
  auto adj = detail::tree_adjacency(n, edges);
  std::string best;
  for (std::size_t c : detail::tree_centers(adj)) {
    std::string code = detail::rooted_code(adj, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline bool trees_isomorphic(std::size_t n1, const TreeEdges& e1,
                             std::size_t n2, const TreeEdges& e2) {
  return n1 == n2 && canonical_form(n1, e1) == canonical_form(n2, e2);
}

}  // namespace endtree

#endif  // ENDTREE_TREE_ISOMORPHISM_HPP_
