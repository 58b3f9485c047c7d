#pragma once

// Shared fixtures, random generators and brute-force oracles for the tests.
// The oracles deliberately avoid the library's own traversal helpers.

#include "rootness/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace rootness::testing {

// "She wrote a book last year": She=1 wrote=2 a=3 book=4 last=5 year=6.
inline constexpr Vertex kShe = 1, kWrote = 2, kA = 3, kBook = 4, kLast = 5, kYear = 6;

inline FreeTree fig1_tree() { return FreeTree(6, {{1, 2}, {2, 4}, {3, 4}, {2, 6}, {5, 6}}); }

inline SentenceStructure fig1_sentence() {
  return SentenceStructure(fig1_tree(), LinearArrangement::identity(6), kWrote, "en", Style::UD, "fig1");
}

/// Uniform labelled tree from a random Pruefer sequence.
inline FreeTree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return FreeTree(1, std::vector<Edge>{});
  if (n == 2) return FreeTree(2, {{1, 2}});
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(n + 1, 1);
  for (auto c : code) ++deg[c];
  std::vector<Edge> edges;
  std::set<Vertex> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (auto c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--deg[c] == 1) leaves.insert(c);
  }
  Vertex a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return FreeTree(n, edges);
}

inline LinearArrangement random_arrangement(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i + 1;
  std::shuffle(pos.begin(), pos.end(), rng);
  return LinearArrangement(std::move(pos));
}

/// Floyd-Warshall over the edge list.
inline std::vector<std::vector<std::size_t>> oracle_distances(const FreeTree& t) {
  const std::size_t n = t.size(), inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : t.edges()) d[u - 1][v - 1] = d[v - 1][u - 1] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Component sizes after deleting v, by flood fill over the edge list.
inline std::vector<std::size_t> oracle_components(const FreeTree& t, Vertex v) {
  const std::size_t n = t.size();
  std::vector<std::size_t> label(n + 1, 0);
  std::size_t next = 0;
  std::vector<std::size_t> sizes;
  for (Vertex s = 1; s <= n; ++s) {
    if (s == v || label[s] != 0) continue;
    ++next;
    label[s] = next;
    std::size_t size = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [a, b] : t.edges()) {
        if (a == v || b == v) continue;
        if (label[a] == next && label[b] == 0) { label[b] = next; ++size; grew = true; }
        if (label[b] == next && label[a] == 0) { label[a] = next; ++size; grew = true; }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Betweenness by definition: pairs s < t whose unique path passes through v.
inline long long oracle_betweenness(const FreeTree& t, Vertex v) {
  auto d = oracle_distances(t);
  long long count = 0;
  for (Vertex s = 1; s <= t.size(); ++s)
    for (Vertex u = s + 1; u <= t.size(); ++u)
      if (s != v && u != v && d[s - 1][v - 1] + d[v - 1][u - 1] == d[s - 1][u - 1]) ++count;
  return count;
}

/// Pairwise-product form sum_{i<j} n_i n_j.
inline long long pairwise_product_betweenness(const std::vector<std::size_t>& sizes) {
  long long s = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) s += static_cast<long long>(sizes[i] * sizes[j]);
  return s;
}

}  // namespace rootness::testing
