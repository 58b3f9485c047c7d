#pragma once

// Free trees, linear arrangements and sentence structures.
//
// Vertices are dense 1-based integers 1..n throughout the public API.

#include "rootness/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rootness {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class FreeTree {
 public:
  /// Validates that `edges` form a tree on 1..n.
  FreeTree(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n) {
    if (n == 0) throw input_error("tree must have at least one vertex");
    if (edges.size() != n - 1)
      throw input_error("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                        " edges, got " + std::to_string(edges.size()));
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw input_error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
      if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
      auto& nu = adj_[u - 1];
      if (std::find(nu.begin(), nu.end(), v) != nu.end())
        throw input_error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      nu.push_back(v);
      adj_[v - 1].push_back(u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    std::sort(edges_.begin(), edges_.end());
    // n-1 edges + connected => acyclic.
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{1};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[u - 1])
        if (!seen[w - 1]) {
          seen[w - 1] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) throw input_error("edge set is not connected");
  }

  FreeTree(std::size_t n, std::initializer_list<Edge> edges)
      : FreeTree(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Tree from a parent array: parent[v-1] is the parent of v, 0 for the root.
  static FreeTree from_parents(std::span<const Vertex> parent) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (parent[i] != 0) edges.emplace_back(i + 1, parent[i]);
    return FreeTree(parent.size(), edges);
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  void check_vertex(Vertex v) const {
    if (!contains(v))
      throw input_error("unknown vertex " + std::to_string(v) + " in tree of " + std::to_string(n_) +
                        " vertices");
  }

  /// Sorted neighbour list.
  const std::vector<Vertex>& neighbours(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
  }

  std::size_t degree(Vertex v) const { return neighbours(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend bool operator==(const FreeTree& a, const FreeTree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Bijection vertex -> position, both in 1..n.
class LinearArrangement {
 public:
  explicit LinearArrangement(std::vector<std::size_t> position) : position_(std::move(position)) {
    const std::size_t n = position_.size();
    vertex_at_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t p = position_[i];
      if (p < 1 || p > n || vertex_at_[p - 1] != 0) throw input_error("arrangement is not a permutation of 1..n");
      vertex_at_[p - 1] = i + 1;
    }
  }

  static LinearArrangement identity(std::size_t n) {
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{1});
    return LinearArrangement(std::move(pos));
  }

  std::size_t size() const noexcept { return position_.size(); }
  std::size_t position(Vertex v) const { return position_.at(v - 1); }
  Vertex vertex_at(std::size_t pos) const { return vertex_at_.at(pos - 1); }
  bool is_identity() const {
    for (std::size_t i = 0; i < position_.size(); ++i)
      if (position_[i] != i + 1) return false;
    return true;
  }

  friend bool operator==(const LinearArrangement&, const LinearArrangement&) = default;

 private:
  std::vector<std::size_t> position_;
  std::vector<Vertex> vertex_at_;
};

enum class Style { UD, SUD };

inline std::string to_string(Style s) { return s == Style::UD ? "ud" : "sud"; }

/// Free tree + word order + gold root + metadata. Word forms and POS tags are
/// carried only for ingestion (punctuation filtering); no score reads them.
struct SentenceStructure {
  SentenceStructure(FreeTree t, LinearArrangement a, Vertex r, std::string lang = {}, Style st = Style::UD,
                    std::string id = {})
      : tree(std::move(t)), arrangement(std::move(a)), root(r), language(std::move(lang)), style(st),
        sentence_id(std::move(id)) {
    if (arrangement.size() != tree.size()) throw input_error("arrangement size differs from tree size");
    tree.check_vertex(root);
  }

  std::size_t size() const noexcept { return tree.size(); }

  FreeTree tree;
  LinearArrangement arrangement;
  Vertex root;
  std::string language;
  Style style;
  std::string sentence_id;
  std::vector<std::string> forms;
  std::vector<std::string> upos;
};

// ---------------------------------------------------------------------------

inline std::size_t degree(const FreeTree& tree, Vertex v) { return tree.degree(v); }

/// BFS distances from v; element u-1 holds delta(v, u).
inline std::vector<std::size_t> distances_from(const FreeTree& tree, Vertex v) {
  tree.check_vertex(v);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(tree.size(), kUnseen);
  std::queue<Vertex> q;
  dist[v - 1] = 0;
  q.push(v);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : tree.neighbours(u))
      if (dist[w - 1] == kUnseen) {
        dist[w - 1] = dist[u - 1] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// All-pairs topological distances, row u-1 = distances_from(u).
inline std::vector<std::vector<std::size_t>> distance_matrix(const FreeTree& tree) {
  std::vector<std::vector<std::size_t>> d;
  d.reserve(tree.size());
  for (Vertex v = 1; v <= tree.size(); ++v) d.push_back(distances_from(tree, v));
  return d;
}

/// Parent of every vertex when the tree hangs from `root` (0 for the root),
/// plus a BFS order starting at the root.
struct RootedView {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;
};

inline RootedView root_at(const FreeTree& tree, Vertex root) {
  tree.check_vertex(root);
  RootedView rv;
  rv.parent.assign(tree.size(), 0);
  rv.order.reserve(tree.size());
  std::vector<bool> seen(tree.size(), false);
  rv.order.push_back(root);
  seen[root - 1] = true;
  for (std::size_t i = 0; i < rv.order.size(); ++i) {
    Vertex u = rv.order[i];
    for (Vertex w : tree.neighbours(u))
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        rv.parent[w - 1] = u;
        rv.order.push_back(w);
      }
  }
  return rv;
}

/// Component sizes left by deleting each vertex, computed from a single
/// rooting: the children's subtree sizes plus the part above.
inline std::vector<std::vector<std::size_t>> all_subtree_sizes(const FreeTree& tree) {
  const std::size_t n = tree.size();
  RootedView rv = root_at(tree, 1);
  std::vector<std::size_t> below(n, 1);
  for (auto it = rv.order.rbegin(); it != rv.order.rend(); ++it)
    if (Vertex p = rv.parent[*it - 1]; p != 0) below[p - 1] += below[*it - 1];
  std::vector<std::vector<std::size_t>> out(n);
  for (Vertex v = 1; v <= n; ++v) {
    auto& sizes = out[v - 1];
    for (Vertex w : tree.neighbours(v))
      sizes.push_back(w == rv.parent[v - 1] ? n - below[v - 1] : below[w - 1]);
    std::sort(sizes.begin(), sizes.end());
  }
  return out;
}

/// Sizes (ascending) of the components produced by deleting v.
inline std::vector<std::size_t> subtree_sizes(const FreeTree& tree, Vertex v) {
  tree.check_vertex(v);
  return all_subtree_sizes(tree)[v - 1];
}

}  // namespace rootness
