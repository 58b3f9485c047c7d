#pragma once

// Exhaustive tree enumeration and brute-force checks of center sets:
// consistency by tree kind, equivalence classes at small n, the tree
// rooting property, and oracles for all-subgraphs and D(v).

#include "rootness/centrality.hpp"
#include "rootness/errors.hpp"
#include "rootness/rational.hpp"
#include "rootness/tree.hpp"
#include "rootness/tree_kind.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace rootness {

inline constexpr std::size_t kMaxEnumeratedTreeSize = 12;

namespace detail {

inline std::string ahu_code(const FreeTree& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbours(v))
    if (w != parent) kids.push_back(ahu_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<Vertex> graph_centers(const FreeTree& t) {
  std::vector<std::size_t> ecc(t.size());
  for (Vertex v = 1; v <= t.size(); ++v) {
    auto d = distances_from(t, v);
    ecc[v - 1] = *std::max_element(d.begin(), d.end());
  }
  const auto best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= t.size(); ++v)
    if (ecc[v - 1] == best) out.push_back(v);
  return out;
}

inline std::string format_centers(const std::vector<Vertex>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

}  // namespace detail

/// Isomorphism-invariant code: the smallest AHU string over the tree's
/// centers used as roots.
inline std::string canonical_code(const FreeTree& t) {
  std::string best;
  for (Vertex c : detail::graph_centers(t)) {
    std::string code = detail::ahu_code(t, c, 0);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// Edge list rendering used in counterexamples, e.g. "1-2 2-3".
inline std::string describe_tree(const FreeTree& t) {
  std::string s;
  for (auto [u, v] : t.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s.empty() ? "(single vertex)" : s;
}

/// One tree per isomorphism class, ordered by canonical code. Rooted trees
/// are generated as level sequences in reverse lexicographic order and
/// deduplicated by their free-tree code.
inline std::vector<FreeTree> enumerate_free_trees(std::size_t n) {
  if (n < 1 || n > kMaxEnumeratedTreeSize)
    throw input_error("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedTreeSize));
  std::map<std::string, FreeTree> unique;
  std::vector<std::size_t> level(n);
  std::iota(level.begin(), level.end(), std::size_t{1});
  std::vector<Vertex> parent(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      parent[i] = 0;
      for (std::size_t j = i; j-- > 0;)
        if (level[j] + 1 == level[i]) {
          parent[i] = j + 1;
          break;
        }
    }
    FreeTree t = FreeTree::from_parents(parent);
    unique.try_emplace(canonical_code(t), t);
    // Successor: p is the last position deeper than level 2, q the last
    // position before p one level above it.
    std::size_t p = n;
    while (p > 0 && level[p - 1] <= 2) --p;
    if (p == 0) break;
    std::size_t q = p - 1;
    while (level[q - 1] != level[p - 1] - 1) --q;
    const std::size_t shift = p - q;
    for (std::size_t i = p; i <= n; ++i) level[i - 1] = level[i - 1 - shift];
  }
  std::vector<FreeTree> out;
  for (auto& [code, t] : unique) out.push_back(std::move(t));
  return out;
}

// --- tree rooting -------------------------------------------------------------------

/// One center, or two adjacent centers.
inline bool satisfies_tree_rooting(const FreeTree& t, const std::vector<Vertex>& c) {
  return c.size() == 1 || (c.size() == 2 && t.adjacent(c[0], c[1]));
}

struct Counterexample {
  FreeTree tree;
  std::vector<Vertex> centers;

  std::string str() const { return describe_tree(tree) + " centers " + detail::format_centers(centers); }
};

struct TreeRootingReport {
  MeasureId measure = MeasureId::Degree;
  std::size_t n_max = 0;
  std::size_t trees_checked = 0;
  std::vector<Counterexample> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};

/// Checks every unlabelled tree with 2 <= n <= n_max (non-spatial measures only).
inline TreeRootingReport check_tree_rooting(MeasureId m, std::size_t n_max, std::size_t max_examples = 5) {
  if (is_spatial(m)) throw input_error("tree rooting is a property of scores on the free tree");
  TreeRootingReport r{m, n_max, 0, {}};
  for (std::size_t n = std::max<std::size_t>(2, info(m).min_n); n <= n_max; ++n)
    for (const auto& t : enumerate_free_trees(n)) {
      ++r.trees_checked;
      auto c = centers(score_tree(t, m));
      if (!satisfies_tree_rooting(t, c) && r.counterexamples.size() < max_examples) r.counterexamples.push_back({t, c});
    }
  return r;
}

// --- consistency on parametric families -------------------------------------------------

/// Smallest size at which the family is distinct from simpler kinds.
inline std::size_t family_min_size(TreeKind kind) {
  switch (kind) {
    case TreeKind::Path: return 2;
    case TreeKind::Star: return 3;
    case TreeKind::BalancedBistar: return 4;
    case TreeKind::Quasistar: return 5;
    default: throw input_error("no parametric family for this tree kind");
  }
}

inline FreeTree make_family_tree(TreeKind kind, std::size_t n) {
  switch (kind) {
    case TreeKind::Path: return make_path(n);
    case TreeKind::Star: return make_star(n);
    case TreeKind::BalancedBistar: return make_balanced_bistar(n);
    case TreeKind::Quasistar: return make_quasistar(n);
    default: throw input_error("no parametric family for this tree kind");
  }
}

/// Centers predicted for the generated family member (labels as produced by
/// make_family_tree).
inline std::vector<Vertex> expected_family_centers(TreeKind kind, std::size_t n, MeasureId m) {
  switch (kind) {
    case TreeKind::Path: {
      std::vector<Vertex> c;
      if (m == MeasureId::Degree) {
        for (Vertex v = 1; v <= n; ++v)
          if (n < 3 || (v != 1 && v != n)) c.push_back(v);
        return c;
      }
      if (n % 2) return {(n + 1) / 2};
      return {n / 2, n / 2 + 1};
    }
    case TreeKind::Star: return {1};
    case TreeKind::BalancedBistar:
      if (n % 2 == 0 || m == MeasureId::Eccentricity) return {1, 2};
      return {1};
    case TreeKind::Quasistar:
      if (m == MeasureId::Eccentricity) return {1, n - 1};
      return {1};
    default: throw input_error("no parametric family for this tree kind");
  }
}

struct ConsistencyReport {
  TreeKind kind = TreeKind::Star;
  std::size_t n_min = 0, n_max = 0;
  std::vector<MeasureId> measures;
  /// agree[i][j]: measures i and j gave the same centers on every tree.
  std::vector<std::vector<bool>> agree;
  std::vector<std::string> mismatches;
  bool holds() const { return mismatches.empty(); }
};

inline ConsistencyReport check_consistency(TreeKind kind, std::span<const MeasureId> measures, std::size_t n_max,
                                           std::size_t max_examples = 10) {
  if (n_max < 3) throw input_error("n_max must be at least 3");
  ConsistencyReport r;
  r.kind = kind;
  r.n_min = family_min_size(kind);
  r.n_max = n_max;
  r.measures.assign(measures.begin(), measures.end());
  for (MeasureId m : measures)
    if (is_spatial(m)) throw input_error("consistency by tree kind concerns scores on the free tree");
  const std::size_t k = measures.size();
  r.agree.assign(k, std::vector<bool>(k, true));
  for (std::size_t n = r.n_min; n <= n_max; ++n) {
    FreeTree t = make_family_tree(kind, n);
    std::vector<std::vector<Vertex>> got;
    for (MeasureId m : measures) {
      got.push_back(centers(score_tree(t, m)));
      auto want = expected_family_centers(kind, n, m);
      if (got.back() != want && r.mismatches.size() < max_examples)
        r.mismatches.push_back("n=" + std::to_string(n) + " " + std::string(name(m)) + ": got " +
                               detail::format_centers(got.back()) + ", expected " + detail::format_centers(want));
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (got[i] != got[j]) r.agree[i][j] = false;
  }
  return r;
}

// --- equivalence classes --------------------------------------------------------------

/// Order in which class representatives are chosen.
inline int representative_preference(MeasureId m) {
  switch (m) {
    case MeasureId::Degree: return 0;
    case MeasureId::Eccentricity: return 1;
    case MeasureId::MaxSubtreeSize: return 2;
    default: return 3 + static_cast<int>(m);
  }
}

struct TreeClasses {
  FreeTree tree;
  TreeKindLabel label;
  std::string code;
  std::map<MeasureId, std::vector<Vertex>> centers;
  /// Measures grouped by identical center sets. Each class is sorted by
  /// representative preference and classes by their representative.
  std::vector<std::vector<MeasureId>> classes;

  std::vector<MeasureId> representatives() const {
    std::vector<MeasureId> out;
    for (const auto& c : classes) out.push_back(c.front());
    return out;
  }
};

inline TreeClasses classes_of(const FreeTree& t, std::span<const MeasureId> measures) {
  TreeClasses tc{t, classify_tree(t), canonical_code(t), {}, {}};
  std::vector<MeasureId> ms(measures.begin(), measures.end());
  std::sort(ms.begin(), ms.end(),
            [](MeasureId a, MeasureId b) { return representative_preference(a) < representative_preference(b); });
  for (MeasureId m : ms) {
    auto c = rootness::centers(score_tree(t, m));
    bool placed = false;
    for (auto& cls : tc.classes)
      if (tc.centers.at(cls.front()) == c) {
        cls.push_back(m);
        placed = true;
        break;
      }
    if (!placed) tc.classes.push_back({m});
    tc.centers.emplace(m, std::move(c));
  }
  return tc;
}

/// Classes for every unlabelled tree of size n, in order of increasing
/// hubiness (ties by canonical code).
inline std::vector<TreeClasses> equivalence_classes(std::size_t n, std::span<const MeasureId> measures) {
  if (n < 3 || n > 6) throw input_error("equivalence classes are tabulated for 3 <= n <= 6");
  std::vector<TreeClasses> out;
  for (const auto& t : enumerate_free_trees(n)) out.push_back(classes_of(t, measures));
  std::stable_sort(out.begin(), out.end(),
                   [](const TreeClasses& a, const TreeClasses& b) { return a.label.hubiness < b.label.hubiness; });
  return out;
}

inline std::vector<TreeClasses> equivalence_classes(std::size_t n) {
  auto ms = non_spatial_ensemble();
  return equivalence_classes(n, ms);
}

/// Union of class representatives over all trees of size n.
inline std::vector<MeasureId> minimal_representatives(std::size_t n) {
  std::vector<MeasureId> out;
  for (const auto& tc : equivalence_classes(n))
    for (MeasureId m : tc.representatives())
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  std::sort(out.begin(), out.end(),
            [](MeasureId a, MeasureId b) { return representative_preference(a) < representative_preference(b); });
  return out;
}

// --- oracles ---------------------------------------------------------------------------

/// Number of vertex subsets containing v that induce a connected subgraph,
/// by scanning all 2^(n-1) candidate subsets.
inline BigInt brute_force_connected_subsets(const FreeTree& t, Vertex v) {
  t.check_vertex(v);
  const std::size_t n = t.size();
  if (n > 20) throw input_error("brute-force subset count refuses n > 20");
  BigInt count = 0;
  std::vector<Vertex> stack;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (!(mask >> (v - 1) & 1u)) continue;
    std::uint32_t seen = std::uint32_t{1} << (v - 1);
    stack.assign(1, v);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbours(u)) {
        const std::uint32_t bit = std::uint32_t{1} << (w - 1);
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) ++count;
  }
  return count;
}

/// Exact mean of D(v) over all n! linear arrangements.
inline Rational exhaustive_arrangement_expectation(const FreeTree& t, Vertex v) {
  t.check_vertex(v);
  const std::size_t n = t.size();
  if (n > 9) throw input_error("exhaustive arrangement average refuses n > 9");
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{1});
  long long total = 0, count = 0;
  do {
    for (Vertex u : t.neighbours(v))
      total += static_cast<long long>(pos[u - 1] > pos[v - 1] ? pos[u - 1] - pos[v - 1] : pos[v - 1] - pos[u - 1]);
    ++count;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return Rational(total, count);
}

}  // namespace rootness
