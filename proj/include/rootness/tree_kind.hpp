#pragma once

// Named tree families (star, quasistar, path, d-quasipath, balanced bistar),
// their generators, and hubiness <k^2>.

#include "rootness/rational.hpp"
#include "rootness/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rootness {

enum class TreeKind { Star, Quasistar, Path, DQuasipath, BalancedBistar, Other };

struct TreeKindLabel {
  TreeKind kind = TreeKind::Other;
  std::size_t d = 0;  // meaningful for DQuasipath only
  Rational hubiness;

  std::string name() const {
    switch (kind) {
      case TreeKind::Star: return "star";
      case TreeKind::Quasistar: return "quasistar";
      case TreeKind::Path: return "path";
      case TreeKind::DQuasipath: return std::to_string(d) + "-quasipath";
      case TreeKind::BalancedBistar: return "b-bistar";
      case TreeKind::Other: return "other";
    }
    return "other";
  }

  friend bool operator==(const TreeKindLabel& a, const TreeKindLabel& b) {
    return a.kind == b.kind && a.d == b.d && a.hubiness == b.hubiness;
  }
};

/// <k^2> = (1/n) sum_i k_i^2.
inline Rational hubiness(const FreeTree& tree) {
  long long sum = 0;
  for (Vertex v = 1; v <= tree.size(); ++v) {
    auto k = static_cast<long long>(tree.degree(v));
    sum += k * k;
  }
  return Rational(sum, static_cast<long long>(tree.size()));
}

inline std::size_t max_degree(const FreeTree& tree) {
  std::size_t m = 0;
  for (Vertex v = 1; v <= tree.size(); ++v) m = std::max(m, tree.degree(v));
  return m;
}

// --- membership predicates (definitions may overlap for small n) -----------

inline bool is_star(const FreeTree& tree) {
  return tree.size() <= 2 || max_degree(tree) == tree.size() - 1;
}

inline bool is_path(const FreeTree& tree) { return max_degree(tree) <= 2; }

/// A star of n-1 vertices with one extra vertex hung from a leaf.
inline bool is_quasistar(const FreeTree& tree) {
  const std::size_t n = tree.size();
  if (n < 4) return false;
  for (Vertex h = 1; h <= n; ++h) {
    if (tree.degree(h) != n - 2) continue;
    std::size_t deg2 = 0, leaves = 0;
    for (Vertex w : tree.neighbours(h)) {
      if (tree.degree(w) == 1) ++leaves;
      else if (tree.degree(w) == 2) ++deg2;
    }
    if (deg2 == 1 && leaves == n - 3) return true;
  }
  return false;
}

/// Two adjacent hubs, every other vertex a leaf, leaf counts within one.
inline bool is_balanced_bistar(const FreeTree& tree) {
  const std::size_t n = tree.size();
  if (n < 4) return false;
  std::vector<Vertex> hubs;
  for (Vertex v = 1; v <= n; ++v)
    if (tree.degree(v) > 1) hubs.push_back(v);
  if (hubs.size() != 2 || !tree.adjacent(hubs[0], hubs[1])) return false;
  std::size_t a = tree.degree(hubs[0]) - 1, b = tree.degree(hubs[1]) - 1;
  return (a > b ? a - b : b - a) <= 1;
}

/// d when the tree is a path of n-1 vertices plus a leaf hung from an
/// internal vertex at distance d from the middle vertex (or vertices).
inline std::optional<std::size_t> quasipath_offset(const FreeTree& tree) {
  const std::size_t n = tree.size();
  if (n < 4) return std::nullopt;
  Vertex hub = 0;
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t k = tree.degree(v);
    if (k > 3) return std::nullopt;
    if (k == 3) {
      if (hub != 0) return std::nullopt;
      hub = v;
    }
  }
  if (hub == 0) return std::nullopt;
  // Branch lengths (vertex counts) of the three arms leaving the hub.
  std::vector<std::size_t> arms;
  for (Vertex w : tree.neighbours(hub)) {
    std::size_t len = 1;
    Vertex prev = hub, cur = w;
    while (tree.degree(cur) == 2) {
      const auto& nb = tree.neighbours(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  // Dropping the shortest arm leaves a path with the hub at position arms[1]+1.
  const std::size_t m = n - 1;
  const std::size_t pos = arms[1] + 1;
  auto dist = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
  if (m % 2 == 1) return dist(pos, (m + 1) / 2);
  return std::min(dist(pos, m / 2), dist(pos, m / 2 + 1));
}

/// Canonical kind, tested in the order Star, Path, Quasistar (n > 4),
/// BalancedBistar (n > 3), DQuasipath, Other.
inline TreeKindLabel classify_tree(const FreeTree& tree) {
  TreeKindLabel label;
  label.hubiness = hubiness(tree);
  const std::size_t n = tree.size();
  if (is_star(tree)) label.kind = TreeKind::Star;
  else if (is_path(tree)) label.kind = TreeKind::Path;
  else if (n > 4 && is_quasistar(tree)) label.kind = TreeKind::Quasistar;
  else if (n > 3 && is_balanced_bistar(tree)) label.kind = TreeKind::BalancedBistar;
  else if (auto d = quasipath_offset(tree)) {
    label.kind = TreeKind::DQuasipath;
    label.d = *d;
  }
  return label;
}

// --- generators ---------------------------------------------------------------

/// Hub is vertex 1.
inline FreeTree make_star(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 2; v <= n; ++v) e.emplace_back(1, v);
  return FreeTree(n, e);
}

/// 1 - 2 - ... - n.
inline FreeTree make_path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 2; v <= n; ++v) e.emplace_back(v - 1, v);
  return FreeTree(n, e);
}

/// Hub 1 with leaves 2..n-2; vertex n-1 hangs from the hub and n from n-1.
inline FreeTree make_quasistar(std::size_t n) {
  if (n < 4) throw input_error("quasistar needs n >= 4");
  std::vector<Edge> e;
  for (Vertex v = 2; v <= n - 1; ++v) e.emplace_back(1, v);
  e.emplace_back(n - 1, n);
  return FreeTree(n, e);
}

/// Hubs 1 and 2; hub 1 gets ceil((n-2)/2) leaves, hub 2 gets the rest.
inline FreeTree make_balanced_bistar(std::size_t n) {
  if (n < 4) throw input_error("balanced bistar needs n >= 4");
  std::vector<Edge> e{{1, 2}};
  const std::size_t first = (n - 1) / 2;  // ceil((n-2)/2)
  Vertex v = 3;
  for (std::size_t i = 0; i < first; ++i) e.emplace_back(1, v++);
  while (v <= n) e.emplace_back(2, v++);
  return FreeTree(n, e);
}

/// Path 1..n-1 with vertex n hung at distance d from the middle.
inline FreeTree make_quasipath(std::size_t n, std::size_t d) {
  if (n < 4) throw input_error("quasipath needs n >= 4");
  const std::size_t m = n - 1;
  const std::size_t mid = (m + 1) / 2;  // lower middle when m is even
  if (d + 2 > mid) throw input_error("d too large for a quasipath of this size");
  std::vector<Edge> e;
  for (Vertex v = 2; v <= m; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(mid - d, n);
  return FreeTree(n, e);
}

}  // namespace rootness
