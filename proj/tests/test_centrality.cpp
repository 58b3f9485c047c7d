#include "rootness/centrality.hpp"
#include "rootness/tree_kind.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace rootness;
using namespace rootness::testing;

namespace {

const FreeTree kSingle(1, std::vector<Edge>{});

SentenceStructure in_order(const FreeTree& t, Vertex root = 1) {
  return SentenceStructure(t, LinearArrangement::identity(t.size()), root);
}

}  // namespace

TEST(Eccentricity, Examples) {
  EXPECT_EQ(eccentricity(fig1_tree(), kWrote), 2u);
  EXPECT_EQ(eccentricity(fig1_tree(), kShe), 3u);
  EXPECT_EQ(eccentricity(make_path(5), 3), 2u);
  EXPECT_EQ(eccentricity(kSingle, 1), 0u);
}

TEST(MeanDistance, Examples) {
  EXPECT_EQ(mean_distance(fig1_tree(), kWrote), Rational(7, 5));
  EXPECT_EQ(mean_distance(make_star(2), 1), Rational(1));
  EXPECT_EQ(mean_distance(make_star(9), 1), Rational(1));
  EXPECT_EQ(mean_distance(make_path(3), 1), Rational(3, 2));
  EXPECT_THROW(mean_distance(kSingle, 1), undefined_score_error);
}

TEST(PopularCloseness, Examples) {
  EXPECT_EQ(popular_closeness(fig1_tree(), kWrote), Rational(1, 7));
  EXPECT_EQ(popular_closeness(fig1_tree(), kShe), Rational(1, 11));
  EXPECT_EQ(popular_closeness(make_star(7), 1), Rational(1, 6));
  EXPECT_THROW(popular_closeness(kSingle, 1), undefined_score_error);
  // 1/((n-1) l(v))
  for (Vertex v = 1; v <= 6; ++v)
    EXPECT_EQ(popular_closeness(fig1_tree(), v), Rational(1) / (Rational(5) * mean_distance(fig1_tree(), v)));
}

TEST(NewmanCloseness, Examples) {
  EXPECT_EQ(newman_closeness(fig1_tree(), kWrote), Rational(4, 5));
  EXPECT_EQ(newman_closeness(make_star(8), 1), Rational(1));
  EXPECT_EQ(newman_closeness(make_path(3), 1), Rational(3, 4));
  EXPECT_THROW(newman_closeness(kSingle, 1), undefined_score_error);
}

TEST(Betweenness, Examples) {
  EXPECT_EQ(betweenness(fig1_tree(), kWrote), 8);
  EXPECT_EQ(betweenness(fig1_tree(), kBook), 4);
  EXPECT_EQ(pairwise_product_betweenness({1, 2, 2}), 8);
  for (Vertex leaf : {kShe, kA, kLast}) EXPECT_EQ(betweenness(fig1_tree(), leaf), 0);
  EXPECT_EQ(betweenness(kSingle, 1), 0);
}

TEST(MaxSubtreeSize, Examples) {
  EXPECT_EQ(max_subtree_size(fig1_tree(), kWrote), 2u);
  EXPECT_EQ(max_subtree_size(fig1_tree(), kShe), 5u);
  EXPECT_EQ(max_subtree_size(make_path(5), 3), 2u);
  EXPECT_THROW(max_subtree_size(kSingle, 1), undefined_score_error);
}

TEST(SecondMomentSubtrees, Examples) {
  EXPECT_EQ(second_moment_subtrees(fig1_tree(), kWrote), Rational(3));
  EXPECT_EQ(second_moment_subtrees(fig1_tree(), kShe), Rational(25));
  EXPECT_EQ(second_moment_subtrees(fig1_tree(), kBook), Rational(17, 2));
  EXPECT_THROW(second_moment_subtrees(kSingle, 1), undefined_score_error);
}

TEST(AllSubgraphs, Examples) {
  EXPECT_EQ(all_subgraphs(fig1_tree(), kWrote), 18);
  EXPECT_EQ(all_subgraphs(make_path(3), 1), 3);
  EXPECT_EQ(all_subgraphs(kSingle, 1), 1);
  EXPECT_EQ(all_subgraphs(make_star(4), 1), 8);
  // Path of 60 vertices: A(middle) = 30 * 31, stars overflow 64 bits quickly.
  EXPECT_EQ(all_subgraphs(make_path(60), 30), 30 * 31);
  EXPECT_EQ(all_subgraphs(make_star(80), 1), BigInt(1) << 79);
}

TEST(SumEdgeDistances, Examples) {
  auto s = fig1_sentence();
  EXPECT_EQ(sum_edge_distances(s, kWrote), 7u);
  EXPECT_EQ(sum_edge_distances(s, kBook), 3u);
  EXPECT_EQ(sum_edge_distances(s, kShe), 1u);
  EXPECT_EQ(sum_edge_distances(in_order(kSingle), 1), 0u);
}

TEST(Coverage, Examples) {
  auto s = fig1_sentence();
  EXPECT_EQ(coverage(s, kWrote), 5u);
  EXPECT_EQ(coverage(s, kBook), 2u);
  auto path = in_order(make_path(7));
  for (Vertex v = 2; v <= 6; ++v) EXPECT_EQ(coverage(path, v), 2u);
  EXPECT_THROW(coverage(in_order(kSingle), 1), undefined_score_error);
}

TEST(CorrectedSumEdgeDistances, Examples) {
  auto s = fig1_sentence();
  EXPECT_EQ(corrected_sum_edge_distances(s, kWrote), Rational(7));
  EXPECT_EQ(corrected_sum_edge_distances(s, kBook), Rational(6, 5));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    SentenceStructure star(make_star(7), random_arrangement(7, rng), 1);
    EXPECT_EQ(corrected_sum_edge_distances(star, 1), Rational(static_cast<long long>(sum_edge_distances(star, 1))));
  }
  EXPECT_THROW(corrected_sum_edge_distances(in_order(kSingle), 1), undefined_score_error);
}

TEST(Straightness, Examples) {
  auto s = fig1_sentence();
  EXPECT_EQ(straightness(s, kWrote), Rational(9, 5));
  // Star of 3 with the hub in the middle: all three tie at 1.
  SentenceStructure star3(make_star(3), LinearArrangement({2, 1, 3}), 1);
  for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(straightness(star3, v), Rational(1));
  auto path = in_order(make_path(8));
  EXPECT_EQ(straightness(path, 1), Rational(1));
  EXPECT_EQ(straightness(path, 8), Rational(1));
  EXPECT_THROW(straightness(in_order(kSingle), 1), undefined_score_error);
}

// Values produced by an independent brute-force script over the example
// sentence (Floyd-Warshall distances, path membership for betweenness,
// 2^n subset scan for all-subgraphs).
TEST(ScoreAll, ExampleSentenceTable) {
  const std::map<MeasureId, std::vector<Rational>> expected{
      {MeasureId::Degree, {1, 3, 1, 2, 1, 2}},
      {MeasureId::Eccentricity, {3, 2, 4, 3, 4, 3}},
      {MeasureId::MeanDistance, {Rational(11, 5), Rational(7, 5), Rational(13, 5), Rational(9, 5), Rational(13, 5), Rational(9, 5)}},
      {MeasureId::PopularCloseness, {Rational(1, 11), Rational(1, 7), Rational(1, 13), Rational(1, 9), Rational(1, 13), Rational(1, 9)}},
      {MeasureId::NewmanCloseness, {Rational(8, 15), Rational(4, 5), Rational(29, 60), Rational(2, 3), Rational(29, 60), Rational(2, 3)}},
      {MeasureId::Betweenness, {0, 8, 0, 4, 0, 4}},
      {MeasureId::MaxSubtreeSize, {5, 2, 5, 4, 5, 4}},
      {MeasureId::SecondMomentSubtrees, {25, 3, 25, Rational(17, 2), 25, Rational(17, 2)}},
      {MeasureId::AllSubgraphs, {10, 18, 8, 14, 8, 14}},
      {MeasureId::SumEdgeDistances, {1, 7, 1, 3, 1, 5}},
      {MeasureId::Coverage, {1, 5, 1, 2, 1, 4}},
      {MeasureId::CorrectedSumEdgeDistances, {Rational(1, 5), 7, Rational(1, 5), Rational(6, 5), Rational(1, 5), 4}},
      {MeasureId::Straightness, {Rational(7, 5), Rational(9, 5), Rational(11, 15), Rational(7, 6), Rational(14, 15), Rational(19, 10)}},
  };
  auto vectors = score_all(fig1_sentence(), all_measures());
  ASSERT_EQ(vectors.size(), 13u);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    EXPECT_EQ(vectors[i].measure, static_cast<MeasureId>(i));
    EXPECT_EQ(vectors[i].values, expected.at(vectors[i].measure)) << name(vectors[i].measure);
    EXPECT_EQ(vectors[i].direction, direction(vectors[i].measure));
  }
}

TEST(ScoreAll, PerVertexAndVectorisedPathsAgree) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 25;
    SentenceStructure s(random_tree(n, rng), random_arrangement(n, rng), 1);
    auto vecs = score_all(s, all_measures());
    for (Vertex v = 1; v <= n; ++v) {
      EXPECT_EQ(vecs[0].value(v), Rational(static_cast<long long>(degree(s.tree, v))));
      EXPECT_EQ(vecs[1].value(v), Rational(static_cast<long long>(eccentricity(s.tree, v))));
      EXPECT_EQ(vecs[2].value(v), mean_distance(s.tree, v));
      EXPECT_EQ(vecs[3].value(v), popular_closeness(s.tree, v));
      EXPECT_EQ(vecs[4].value(v), newman_closeness(s.tree, v));
      EXPECT_EQ(vecs[5].value(v), Rational(betweenness(s.tree, v)));
      EXPECT_EQ(vecs[6].value(v), Rational(static_cast<long long>(max_subtree_size(s.tree, v))));
      EXPECT_EQ(vecs[7].value(v), second_moment_subtrees(s.tree, v));
      EXPECT_EQ(vecs[8].value(v), Rational(all_subgraphs(s.tree, v)));
      EXPECT_EQ(vecs[9].value(v), Rational(static_cast<long long>(sum_edge_distances(s, v))));
      EXPECT_EQ(vecs[10].value(v), Rational(static_cast<long long>(coverage(s, v))));
      EXPECT_EQ(vecs[11].value(v), corrected_sum_edge_distances(s, v));
      EXPECT_EQ(vecs[12].value(v), straightness(s, v));
    }
  }
}

TEST(ScoreAll, SmallTrees) {
  auto single = in_order(kSingle);
  auto deg = score_all(single, {MeasureId::Degree});
  ASSERT_EQ(deg.size(), 1u);
  EXPECT_EQ(deg[0].values, std::vector<Rational>{0});
  auto btw = score_all(in_order(make_path(2)), {MeasureId::Betweenness});
  EXPECT_EQ(btw[0].values, (std::vector<Rational>{0, 0}));
  EXPECT_THROW(score_all(single, {MeasureId::Straightness}), undefined_score_error);
  // Output order follows MeasureId regardless of request order; duplicates collapse.
  auto v = score_all(fig1_sentence(), {MeasureId::Straightness, MeasureId::Degree, MeasureId::Degree});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].measure, MeasureId::Degree);
  EXPECT_EQ(v[1].measure, MeasureId::Straightness);
}

TEST(Centers, Examples) {
  auto s = fig1_sentence();
  EXPECT_EQ(centers(score(s, MeasureId::Degree)), std::vector<Vertex>{kWrote});
  auto straight = score(s, MeasureId::Straightness);
  auto c = centers(straight);
  EXPECT_EQ(c, std::vector<Vertex>{kYear});
  // The root is second.
  for (Vertex v = 1; v <= 6; ++v)
    if (v != kYear && v != kWrote) {
      EXPECT_LT(straight.value(v), straight.value(kWrote));
    }
  EXPECT_EQ(centers(score_tree(make_path(4), MeasureId::Degree)), (std::vector<Vertex>{2, 3}));
  for (MeasureId m : all_measures())
    if (m != MeasureId::Straightness) {
      EXPECT_EQ(centers(score(s, m)), std::vector<Vertex>{kWrote}) << name(m);
    }
}

TEST(Measures, Metadata) {
  EXPECT_EQ(default_ensemble().size(), 11u);
  std::size_t spatial = 0;
  for (auto m : all_measures()) spatial += is_spatial(m);
  EXPECT_EQ(spatial, 4u);
  EXPECT_TRUE(is_spatial(MeasureId::Straightness));
  EXPECT_FALSE(is_spatial(MeasureId::AllSubgraphs));
  EXPECT_EQ(parse_measure("D'"), MeasureId::CorrectedSumEdgeDistances);
  EXPECT_EQ(parse_measure("max-subtree-size"), MeasureId::MaxSubtreeSize);
  EXPECT_FALSE(parse_measure("pagerank"));
}

// --- properties on random trees ----------------------------------------------------

TEST(CentralityProperty, BetweennessClosedFormMatchesDefinition) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 30;
    FreeTree t = random_tree(n, rng);
    for (Vertex v = 1; v <= n; ++v) {
      auto sizes = oracle_components(t, v);
      EXPECT_EQ(betweenness(t, v), pairwise_product_betweenness(sizes));
      if (trial < 40) {
        EXPECT_EQ(betweenness(t, v), oracle_betweenness(t, v));
      }
    }
  }
}

TEST(CentralityProperty, MomentIdentities) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 40;
    FreeTree t = random_tree(n, rng);
    const auto nm1 = static_cast<long long>(n - 1);
    for (Vertex v = 1; v <= n; ++v) {
      auto sizes = subtree_sizes(t, v);
      const auto k = static_cast<long long>(sizes.size());
      Rational mean;
      for (auto s : sizes) mean += Rational(static_cast<long long>(s));
      mean /= Rational(k);
      EXPECT_EQ(mean, Rational(nm1, k));
      Rational m2 = second_moment_subtrees(t, v);
      Rational var;
      for (auto s : sizes) {
        Rational dev = Rational(static_cast<long long>(s)) - mean;
        var += dev * dev;
      }
      var /= Rational(k);
      EXPECT_EQ(var, m2 - mean * mean);
      Rational btw(betweenness(t, v));
      EXPECT_EQ(btw, (Rational(nm1 * nm1) - Rational(k) * m2) / Rational(2));
      // (k-1)(2n-2-k)/2 <= betweenness <= (n-1)^2/2 (1 - 1/k) <= C(n-1, 2)
      const auto nn = static_cast<long long>(n);
      Rational variance_bound = Rational(nm1 * nm1, 2) * (Rational(1) - Rational(1, k));
      EXPECT_LE(Rational((k - 1) * (2 * nn - 2 - k), 2), btw);
      EXPECT_LE(btw, variance_bound);
      EXPECT_LE(variance_bound, Rational(nm1 * (nm1 - 1) / 2));
    }
  }
}

// V(v) >= 0 bounds the sum of squared subtree sizes from below, so the
// variance expression caps betweenness rather than supporting it.
TEST(CentralityProperty, VarianceExpressionIsAnUpperBound) {
  // wrote: k = 3, n = 6, betweenness 8 < 25/3.
  EXPECT_LT(Rational(betweenness(fig1_tree(), kWrote)), Rational(25, 2) * Rational(2, 3));
  // Tight lower bound: one large branch plus k-1 leaves.
  FreeTree broom(7, {{1, 2}, {1, 3}, {1, 4}, {4, 5}, {5, 6}, {6, 7}});
  EXPECT_EQ(betweenness(broom, 1), (3 - 1) * (2 * 7 - 2 - 3) / 2);
}

TEST(CentralityProperty, StrictlyMonotoneTransformsKeepCenters) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    FreeTree t = random_tree(3 + trial % 20, rng);
    auto vec = score_tree(t, MeasureId::NewmanCloseness);
    auto shifted = vec;
    for (auto& x : shifted.values) x = x * Rational(3) + Rational(7, 2);
    EXPECT_EQ(centers(vec), centers(shifted));
  }
}
