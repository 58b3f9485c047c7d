#pragma once

// Named, re-runnable checks of the theoretical properties. Each claim
// reports pass/fail plus witnesses: counterexamples when a property was
// expected to hold, or the examples showing that it fails when failure is
// the documented outcome.

#include "rootness/centrality.hpp"
#include "rootness/consistency.hpp"
#include "rootness/tree_kind.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace rootness {

struct VerifyLimits {
  std::size_t family_n = 100;       // parametric families
  std::size_t exhaustive_n = 10;    // all unlabelled trees
  std::size_t random_trees = 1000;  // random labelled trees per claim
  std::size_t random_n = 50;        // their maximum size
  std::size_t arrangement_n = 7;    // exhaustive arrangements
  std::size_t arrangement_pairs = 100000;
  std::uint64_t seed = 1;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  bool holds = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;
  double seconds = 0;
};

namespace detail {

inline FreeTree random_labelled_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return FreeTree(1, std::vector<Edge>{});
  // Random recursive attachment over a shuffled labelling; enough variety for
  // property checks, and independent of the enumeration code.
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{1});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    e.emplace_back(label[i], label[pick(rng)]);
  }
  return FreeTree(n, e);
}

inline LinearArrangement random_arrangement(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{1});
  std::shuffle(pos.begin(), pos.end(), rng);
  return LinearArrangement(std::move(pos));
}

inline void witness(ClaimResult& r, std::string w, std::size_t cap = 5) {
  if (r.witnesses.size() < cap) r.witnesses.push_back(std::move(w));
}

inline void fail(ClaimResult& r, std::string w) {
  r.holds = false;
  witness(r, std::move(w));
}

using Classes = std::vector<std::vector<MeasureId>>;

/// Expected partition of the non-spatial ensemble per unlabelled tree name.
inline std::map<std::string, Classes> expected_classes(std::size_t n) {
  using M = MeasureId;
  const std::vector<M> rest{M::NewmanCloseness, M::Betweenness, M::SecondMomentSubtrees, M::AllSubgraphs};
  auto with = [&](std::vector<M> head) {
    head.insert(head.end(), rest.begin(), rest.end());
    return head;
  };
  const Classes one{with({M::Degree, M::Eccentricity, M::MaxSubtreeSize})};
  const Classes path{{M::Degree}, with({M::Eccentricity, M::MaxSubtreeSize})};
  const Classes quasistar{with({M::Degree, M::MaxSubtreeSize}), {M::Eccentricity}};
  switch (n) {
    case 3: return {{"star", one}};
    case 4: return {{"path", one}, {"star", one}};
    case 5: return {{"path", path}, {"quasistar", quasistar}, {"star", one}};
    default:
      return {{"path", path},
              {"0-quasipath", one},
              {"1-quasipath", {with({M::Degree}), {M::Eccentricity}, {M::MaxSubtreeSize}}},
              {"b-bistar", one},
              {"quasistar", quasistar},
              {"star", one}};
  }
}

inline std::string describe_classes(const Classes& cs) {
  std::string s;
  for (const auto& c : cs) {
    s += "{";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::string(name(c[i]));
    s += "}";
  }
  return s;
}

}  // namespace detail

inline ClaimResult verify_betweenness_identity(const VerifyLimits& lim) {
  ClaimResult r{"betweenness-identity", "sum_{i<j} n_i n_j = ((n-1)^2 - sum n_i^2)/2 on random trees", true, 0, {}, 0};
  std::mt19937_64 rng(lim.seed);
  std::uniform_int_distribution<std::size_t> size(2, lim.random_n);
  for (std::size_t i = 0; i < lim.random_trees; ++i) {
    FreeTree t = detail::random_labelled_tree(size(rng), rng);
    auto sizes = all_subtree_sizes(t);
    const auto n1 = static_cast<long long>(t.size() - 1);
    for (Vertex v = 1; v <= t.size(); ++v) {
      ++r.cases;
      long long pairwise = 0, squares = 0, prefix = 0;
      for (auto s : sizes[v - 1]) {
        pairwise += prefix * static_cast<long long>(s);
        prefix += static_cast<long long>(s);
        squares += static_cast<long long>(s * s);
      }
      if (2 * pairwise != n1 * n1 - squares)
        detail::fail(r, describe_tree(t) + " vertex " + std::to_string(v));
    }
  }
  return r;
}

inline ClaimResult verify_moment_identities(const VerifyLimits& lim) {
  ClaimResult r{"moment-identities",
                "mean subtree size (n-1)/k, variance m2 - mean^2, betweenness ((n-1)^2 - k m2)/2", true, 0, {}, 0};
  std::mt19937_64 rng(lim.seed + 1);
  std::uniform_int_distribution<std::size_t> size(2, lim.random_n);
  for (std::size_t i = 0; i < lim.random_trees; ++i) {
    FreeTree t = detail::random_labelled_tree(size(rng), rng);
    const auto n1 = static_cast<long long>(t.size() - 1);
    for (Vertex v = 1; v <= t.size(); ++v) {
      ++r.cases;
      auto sizes = subtree_sizes(t, v);
      const auto k = static_cast<long long>(sizes.size());
      Rational mean, var;
      for (auto s : sizes) mean += Rational(static_cast<long long>(s));
      mean /= Rational(k);
      for (auto s : sizes) {
        Rational d = Rational(static_cast<long long>(s)) - mean;
        var += d * d;
      }
      var /= Rational(k);
      Rational m2 = second_moment_subtrees(t, v);
      if (mean != Rational(n1, k) || var != m2 - mean * mean ||
          Rational(betweenness(t, v)) != (Rational(n1 * n1) - Rational(k) * m2) / Rational(2))
        detail::fail(r, describe_tree(t) + " vertex " + std::to_string(v));
    }
  }
  return r;
}

/// The variance argument caps betweenness at (n-1)^2/2 (1 - 1/k); a broom
/// (one long branch plus k-1 leaves) attains the lower end.
inline ClaimResult verify_betweenness_bounds(const VerifyLimits& lim) {
  ClaimResult r{"betweenness-bounds", "(k-1)(2n-2-k)/2 <= betweenness <= (n-1)^2/2 (1-1/k) <= C(n-1,2)", true, 0, {},
                0};
  std::mt19937_64 rng(lim.seed + 2);
  std::uniform_int_distribution<std::size_t> size(2, lim.random_n);
  for (std::size_t i = 0; i < lim.random_trees; ++i) {
    FreeTree t = detail::random_labelled_tree(size(rng), rng);
    const auto n = static_cast<long long>(t.size());
    for (Vertex v = 1; v <= t.size(); ++v) {
      ++r.cases;
      const auto k = static_cast<long long>(t.degree(v));
      Rational b(betweenness(t, v));
      Rational lower((k - 1) * (2 * n - 2 - k), 2);
      Rational upper = Rational((n - 1) * (n - 1), 2) * (Rational(1) - Rational(1, k));
      Rational cap((n - 1) * (n - 2), 2);
      if (!(lower <= b && b <= upper && upper <= cap))
        detail::fail(r, describe_tree(t) + " vertex " + std::to_string(v) + " betweenness " + b.str());
    }
  }
  return r;
}

inline ClaimResult verify_median_centroid(const VerifyLimits& lim) {
  ClaimResult r{"median-centroid", "argmax closeness = argmin max subtree size", true, 0, {}, 0};
  auto check = [&](const FreeTree& t) {
    ++r.cases;
    auto a = centers(score_tree(t, MeasureId::PopularCloseness));
    auto b = centers(score_tree(t, MeasureId::MaxSubtreeSize));
    if (a != b) detail::fail(r, describe_tree(t));
  };
  for (std::size_t n = 2; n <= lim.exhaustive_n; ++n)
    for (const auto& t : enumerate_free_trees(n)) check(t);
  std::mt19937_64 rng(lim.seed + 3);
  std::uniform_int_distribution<std::size_t> size(2, lim.random_n);
  for (std::size_t i = 0; i < lim.random_trees; ++i) check(detail::random_labelled_tree(size(rng), rng));
  return r;
}

inline ClaimResult verify_all_subgraphs_oracle(const VerifyLimits& lim) {
  ClaimResult r{"all-subgraphs-oracle", "product over children = connected subsets containing v", true, 0, {}, 0};
  for (std::size_t n = 1; n <= lim.exhaustive_n; ++n)
    for (const auto& t : enumerate_free_trees(n))
      for (Vertex v = 1; v <= n; ++v) {
        ++r.cases;
        if (all_subgraphs(t, v) != brute_force_connected_subsets(t, v))
          detail::fail(r, describe_tree(t) + " vertex " + std::to_string(v));
      }
  return r;
}

inline ClaimResult verify_d_expectation(const VerifyLimits& lim) {
  ClaimResult r{"d-expectation", "mean of D(v) over all n! arrangements = k(v)(n+1)/3", true, 0, {}, 0};
  for (std::size_t n = 1; n <= lim.arrangement_n; ++n)
    for (const auto& t : enumerate_free_trees(n))
      for (Vertex v = 1; v <= n; ++v) {
        ++r.cases;
        Rational want(static_cast<long long>(t.degree(v) * (n + 1)), 3);
        Rational got = exhaustive_arrangement_expectation(t, v);
        if (got != want) detail::fail(r, describe_tree(t) + " vertex " + std::to_string(v) + " got " + got.str());
      }
  return r;
}

inline ClaimResult verify_d_bounds(const VerifyLimits& lim) {
  ClaimResult r{"d-bounds", "floor((k+1)^2/4) <= D(v) <= k(2n-1-k)/2", true, 0, {}, 0};
  std::mt19937_64 rng(lim.seed + 4);
  std::uniform_int_distribution<std::size_t> size(2, lim.random_n);
  for (std::size_t i = 0; i < lim.arrangement_pairs; ++i) {
    const std::size_t n = size(rng);
    SentenceStructure s(detail::random_labelled_tree(n, rng), detail::random_arrangement(n, rng), 1);
    for (Vertex v = 1; v <= n; ++v) {
      ++r.cases;
      const std::size_t k = s.tree.degree(v), d = sum_edge_distances(s, v);
      if (d < (k + 1) * (k + 1) / 4 || 2 * d > k * (2 * n - 1 - k))
        detail::fail(r, describe_tree(s.tree) + " vertex " + std::to_string(v) + " D=" + std::to_string(d));
    }
  }
  return r;
}

inline ClaimResult verify_family(TreeKind kind, const VerifyLimits& lim) {
  static const std::map<TreeKind, std::pair<std::string, std::string>> text{
      {TreeKind::Path, {"consistency.path", "paths: degree picks degree-2 vertices, all others the middle"}},
      {TreeKind::BalancedBistar,
       {"consistency.bistar", "balanced bistars: both hubs (even n); heavier hub, eccentricity both hubs (odd n)"}},
      {TreeKind::Quasistar, {"consistency.quasistar", "quasistars: hub, eccentricity adds the degree-2 vertex"}},
      {TreeKind::Star, {"consistency.star", "stars: every score picks the hub"}},
  };
  ClaimResult r{text.at(kind).first, text.at(kind).second, true, 0, {}, 0};
  std::vector<MeasureId> ms;
  for (MeasureId m : all_measures())
    if (!is_spatial(m)) ms.push_back(m);
  auto rep = check_consistency(kind, ms, lim.family_n);
  r.cases = (lim.family_n + 1 - rep.n_min) * ms.size();
  for (const auto& m : rep.mismatches) detail::fail(r, m);
  return r;
}

inline ClaimResult verify_equivalence_classes() {
  ClaimResult r{"equivalence-classes", "classes of non-spatial scores per unlabelled tree, 3 <= n <= 6", true, 0, {},
                0};
  for (std::size_t n = 3; n <= 6; ++n) {
    auto expected = detail::expected_classes(n);
    auto got = equivalence_classes(n);
    if (got.size() != expected.size()) detail::fail(r, "n=" + std::to_string(n) + ": unexpected number of trees");
    for (const auto& tc : got) {
      ++r.cases;
      auto it = expected.find(tc.label.name());
      if (it == expected.end()) {
        detail::fail(r, "n=" + std::to_string(n) + ": unexpected tree " + tc.label.name());
      } else if (it->second != tc.classes) {
        detail::fail(r, "n=" + std::to_string(n) + " " + tc.label.name() + ": got " +
                            detail::describe_classes(tc.classes) + ", expected " + detail::describe_classes(it->second));
      }
    }
  }
  const std::vector<std::vector<MeasureId>> reps{{MeasureId::Degree},
                                                 {MeasureId::Degree},
                                                 {MeasureId::Degree, MeasureId::Eccentricity},
                                                 {MeasureId::Degree, MeasureId::Eccentricity, MeasureId::MaxSubtreeSize}};
  for (std::size_t n = 3; n <= 6; ++n) {
    ++r.cases;
    if (minimal_representatives(n) != reps[n - 3])
      detail::fail(r, "n=" + std::to_string(n) + ": minimal representatives " +
                          detail::describe_classes({minimal_representatives(n)}));
  }
  return r;
}

/// Scores documented to have the tree rooting property, and those documented
/// to lack it.
inline const std::vector<std::pair<MeasureId, bool>>& tree_rooting_expectations() {
  static const std::vector<std::pair<MeasureId, bool>> e{
      {MeasureId::PopularCloseness, true}, {MeasureId::Eccentricity, true}, {MeasureId::MaxSubtreeSize, true},
      {MeasureId::AllSubgraphs, true},     {MeasureId::Degree, false},      {MeasureId::Betweenness, false},
  };
  return e;
}

inline ClaimResult verify_tree_rooting(MeasureId m, bool expected, const VerifyLimits& lim) {
  ClaimResult r{"tree-rooting." + std::string(name(m)),
                std::string(name(m)) + (expected ? " has" : " lacks") + " the tree rooting property", true, 0, {}, 0};
  auto rep = check_tree_rooting(m, lim.exhaustive_n);
  r.cases = rep.trees_checked;
  for (const auto& c : rep.counterexamples) detail::witness(r, c.str());
  r.holds = rep.holds() == expected;
  if (!expected && r.holds) return r;
  if (!r.holds && r.witnesses.empty()) r.witnesses.push_back("no counterexample up to n=" + std::to_string(lim.exhaustive_n));
  return r;
}

inline ClaimResult verify_star_spatial(const VerifyLimits& lim) {
  ClaimResult r{"star-spatial",
                "on stars D and D' pick the hub; coverage ties hub and far leaf when the hub is at an end; "
                "straightness ties all three vertices of a 3-star with the hub in the middle",
                true, 0, {}, 0};
  std::mt19937_64 rng(lim.seed + 5);
  auto check = [&](const SentenceStructure& s) {
    ++r.cases;
    for (MeasureId m : {MeasureId::SumEdgeDistances, MeasureId::CorrectedSumEdgeDistances}) {
      auto c = centers(score(s, m));
      if (c != std::vector<Vertex>{1})
        detail::fail(r, "star n=" + std::to_string(s.size()) + " " + std::string(name(m)) + " centers " +
                            detail::format_centers(c));
    }
    const std::size_t n = s.size(), hub_pos = s.arrangement.position(1);
    if (n >= 3 && (hub_pos == 1 || hub_pos == n)) {
      Vertex far = s.arrangement.vertex_at(hub_pos == 1 ? n : 1);
      std::vector<Vertex> want{1, far};
      auto c = centers(score(s, MeasureId::Coverage));
      if (c != want) detail::fail(r, "star n=" + std::to_string(n) + " coverage centers " + detail::format_centers(c));
    }
  };
  for (std::size_t n = 3; n <= std::min<std::size_t>(lim.arrangement_n, 7); ++n) {
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{1});
    do check(SentenceStructure(make_star(n), LinearArrangement(pos), 1));
    while (std::next_permutation(pos.begin(), pos.end()));
  }
  for (std::size_t i = 0; i < lim.random_trees; ++i) {
    std::uniform_int_distribution<std::size_t> size(3, std::max<std::size_t>(3, lim.random_n));
    const std::size_t n = size(rng);
    check(SentenceStructure(make_star(n), detail::random_arrangement(n, rng), 1));
  }
  SentenceStructure mid(make_star(3), LinearArrangement({2, 1, 3}), 1);
  ++r.cases;
  if (centers(score(mid, MeasureId::Straightness)).size() != 3) detail::fail(r, "3-star, hub in the middle: straightness");
  return r;
}

inline ClaimResult verify_tree_counts(const VerifyLimits& lim) {
  ClaimResult r{"tree-counts", "unlabelled trees: 1,1,1,2,3,6,11,23,47,106,235,551", true, 0, {}, 0};
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= std::min(lim.exhaustive_n, kMaxEnumeratedTreeSize); ++n) {
    ++r.cases;
    auto got = enumerate_free_trees(n).size();
    if (got != counts[n - 1]) detail::fail(r, "n=" + std::to_string(n) + ": " + std::to_string(got));
  }
  return r;
}

inline ClaimResult verify_hubiness_order(const VerifyLimits& lim) {
  ClaimResult r{"hubiness-order", "<k^2> is minimised by the path and maximised by the star", true, 0, {}, 0};
  for (std::size_t n = 4; n <= lim.exhaustive_n; ++n) {
    const Rational lo = hubiness(make_path(n)), hi = hubiness(make_star(n));
    for (const auto& t : enumerate_free_trees(n)) {
      ++r.cases;
      const Rational h = hubiness(t);
      if ((h <= lo && !is_path(t)) || (h >= hi && !is_star(t)) || h < lo || h > hi)
        detail::fail(r, describe_tree(t) + " hubiness " + h.str());
    }
  }
  return r;
}

/// All claim identifiers in reporting order.
inline std::vector<std::string> claim_ids() {
  std::vector<std::string> ids{"betweenness-identity", "moment-identities", "betweenness-bounds", "median-centroid",
                               "all-subgraphs-oracle", "d-expectation",     "d-bounds",           "consistency.path",
                               "consistency.bistar",   "consistency.quasistar", "consistency.star",
                               "equivalence-classes"};
  for (const auto& [m, expected] : tree_rooting_expectations()) ids.push_back("tree-rooting." + std::string(name(m)));
  for (const char* id : {"star-spatial", "tree-counts", "hubiness-order"}) ids.emplace_back(id);
  return ids;
}

inline ClaimResult run_claim(const std::string& id, const VerifyLimits& lim) {
  auto start = std::chrono::steady_clock::now();
  ClaimResult r;
  if (id == "betweenness-identity") r = verify_betweenness_identity(lim);
  else if (id == "moment-identities") r = verify_moment_identities(lim);
  else if (id == "betweenness-bounds") r = verify_betweenness_bounds(lim);
  else if (id == "median-centroid") r = verify_median_centroid(lim);
  else if (id == "all-subgraphs-oracle") r = verify_all_subgraphs_oracle(lim);
  else if (id == "d-expectation") r = verify_d_expectation(lim);
  else if (id == "d-bounds") r = verify_d_bounds(lim);
  else if (id == "consistency.path") r = verify_family(TreeKind::Path, lim);
  else if (id == "consistency.bistar") r = verify_family(TreeKind::BalancedBistar, lim);
  else if (id == "consistency.quasistar") r = verify_family(TreeKind::Quasistar, lim);
  else if (id == "consistency.star") r = verify_family(TreeKind::Star, lim);
  else if (id == "equivalence-classes") r = verify_equivalence_classes();
  else if (id == "star-spatial") r = verify_star_spatial(lim);
  else if (id == "tree-counts") r = verify_tree_counts(lim);
  else if (id == "hubiness-order") r = verify_hubiness_order(lim);
  else {
    bool found = false;
    for (const auto& [m, expected] : tree_rooting_expectations())
      if (id == "tree-rooting." + std::string(name(m))) {
        r = verify_tree_rooting(m, expected, lim);
        found = true;
      }
    if (!found) throw input_error("unknown claim '" + id + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Claims whose id starts with any of the given prefixes (all when empty).
inline std::vector<std::string> select_claims(const std::vector<std::string>& prefixes) {
  std::vector<std::string> out;
  for (const auto& id : claim_ids()) {
    bool keep = prefixes.empty();
    for (const auto& p : prefixes) keep = keep || id.rfind(p, 0) == 0;
    if (keep) out.push_back(id);
  }
  return out;
}

}  // namespace rootness
