#include "rootness/evaluation.hpp"
#include "rootness/tree_kind.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace rootness;
using namespace rootness::testing;

namespace {

CentralityVector make_vector(std::vector<Rational> values, Direction d = Direction::Maximize) {
  return CentralityVector{MeasureId::Degree, d, std::move(values)};
}

}  // namespace

TEST(RankRoot, ExampleSentence) {
  auto s = fig1_sentence();
  auto deg = rank_root(score(s, MeasureId::Degree), kWrote);
  EXPECT_EQ(deg.raw_rank, Rational(1));
  EXPECT_EQ(deg.normalized_rank, Rational(0));
  EXPECT_DOUBLE_EQ(deg.normalized_dcg, 1.0);
  // Straightness ranks the root second.
  auto st = rank_root(score(s, MeasureId::Straightness), kWrote);
  EXPECT_EQ(st.raw_rank, Rational(2));
  EXPECT_EQ(st.normalized_rank, Rational(1, 5));
  const double lo = 1 / std::log2(7.0);
  EXPECT_NEAR(st.normalized_dcg, (1 / std::log2(3.0) - lo) / (1 - lo), 1e-12);
  // Eccentricity is minimised; the root is its unique minimum.
  EXPECT_EQ(rank_root(score(s, MeasureId::Eccentricity), kWrote).raw_rank, Rational(1));
}

TEST(RankRoot, TiesAndBoundaries) {
  for (std::size_t n = 2; n <= 9; ++n) {
    auto v = make_vector(std::vector<Rational>(n, Rational(4)));
    auto r = rank_root(v, 1);
    EXPECT_EQ(r.raw_rank, Rational(static_cast<long long>(n + 1), 2));
    EXPECT_EQ(r.normalized_rank, Rational(1, 2));
  }
  auto last = rank_root(make_vector({3, 2, 1}), 3);
  EXPECT_EQ(last.normalized_rank, Rational(1));
  EXPECT_DOUBLE_EQ(last.normalized_dcg, 0.0);
  // Tie block [2..3] -> 5/2.
  EXPECT_EQ(rank_root(make_vector({1, 5, 1, 1}, Direction::Minimize), 3).raw_rank, Rational(2));
  EXPECT_EQ(rank_root(make_vector({9, 5, 5, 1}), 2).raw_rank, Rational(5, 2));
  EXPECT_THROW(rank_root(make_vector({1}), 1), undefined_score_error);
  EXPECT_THROW(rank_root(make_vector({1, 2}), 3), input_error);
}

TEST(ClassifyRoots, Examples) {
  auto s = fig1_sentence();
  auto deg = classify_roots(score(s, MeasureId::Degree), kWrote);
  EXPECT_EQ(deg.guesses, std::vector<Vertex>{kWrote});
  EXPECT_TRUE(deg.hit);
  EXPECT_FALSE(classify_roots(score(s, MeasureId::Straightness), kWrote).hit);
  auto path = classify_roots(score_tree(make_path(4), MeasureId::Degree), 1);
  EXPECT_EQ(path.guesses.size(), 2u);
  EXPECT_FALSE(path.hit);
}

TEST(ClassifierTally, Metrics) {
  ClassifierTally t;
  t.add(1, true);
  EXPECT_EQ(t.precision(), Rational(1));
  EXPECT_EQ(t.recall(), Rational(1));
  EXPECT_EQ(t.f_measure(), Rational(1));
  t.add(2, false);
  t.add(3, true);
  EXPECT_EQ(t.precision(), Rational(2, 6));
  EXPECT_EQ(t.recall(), Rational(2, 3));
  EXPECT_EQ(t.f_measure(), Rational(4, 9));
  EXPECT_EQ(t.f_measure(), Rational(2) / (Rational(1) / t.precision() + Rational(1) / t.recall()));
  EXPECT_EQ(t.fdr(), Rational(2, 3));
  EXPECT_EQ(t.ns_over_nm(), Rational(1, 2));
  ClassifierTally miss;
  miss.add(2, false);
  EXPECT_EQ(miss.f_measure(), Rational(0));
}

TEST(Tally, SingleSentenceAndStars) {
  std::vector<SentenceStructure> one{fig1_sentence()};
  auto r = tally(one, MeasureId::Degree);
  EXPECT_EQ(r.tally.precision(), Rational(1));
  EXPECT_EQ(r.tally.recall(), Rational(1));
  EXPECT_EQ(r.tally.f_measure(), Rational(1));
  std::vector<SentenceStructure> stars;
  std::mt19937_64 rng(31);
  for (std::size_t n = 3; n < 12; ++n) stars.emplace_back(make_star(n), random_arrangement(n, rng), 1);
  auto s = tally(stars, MeasureId::Degree);
  EXPECT_EQ(s.tally.sentences, 9u);
  EXPECT_EQ(s.tally.precision(), Rational(1));
  EXPECT_EQ(s.mean_rank, Rational(0));
  EXPECT_THROW(tally(std::vector<SentenceStructure>{}, MeasureId::Degree), input_error);
}

TEST(Evaluate, ParallelMatchesSequential) {
  std::mt19937_64 rng(32);
  std::vector<SentenceStructure> sentences;
  for (int i = 0; i < 80; ++i) {
    std::size_t n = 3 + i % 15;
    std::uniform_int_distribution<Vertex> pick(1, n);
    sentences.emplace_back(random_tree(n, rng), random_arrangement(n, rng), pick(rng));
  }
  auto ms = default_ensemble();
  auto a = evaluate("x", sentences, ms, 1);
  auto b = evaluate("x", sentences, ms, 4);
  ASSERT_EQ(a.measures.size(), ms.size());
  EXPECT_EQ(a.baseline, b.baseline);
  for (std::size_t k = 0; k < ms.size(); ++k) {
    EXPECT_EQ(a.measures[k].tally.hits, b.measures[k].tally.hits);
    EXPECT_EQ(a.measures[k].tally.guesses, b.measures[k].tally.guesses);
    EXPECT_EQ(a.measures[k].mean_rank, b.measures[k].mean_rank);
    EXPECT_EQ(a.measures[k].median_rank, b.measures[k].median_rank);
    EXPECT_EQ(a.measures[k].mean_dcg, b.measures[k].mean_dcg);
  }
}

TEST(Baselines, ClassifierExpectation) {
  EXPECT_EQ(baseline_classifier_expectation(std::vector<std::size_t>{3, 4, 5}), Rational(47, 180));
  EXPECT_EQ(baseline_classifier_expectation(std::vector<std::size_t>(36, 3)), Rational(1, 3));
  EXPECT_EQ(baseline_classifier_expectation(std::vector<std::size_t>(7, 5)), Rational(1, 5));
  EXPECT_THROW(baseline_classifier_expectation(std::vector<std::size_t>{}), input_error);
}

TEST(Baselines, RankAndDcg) {
  EXPECT_EQ(baseline_rank_expectation(), Rational(1, 2));
  // Exhaustive mean of the normalised rank under uniform ranks is 1/2 for every n.
  for (long long n = 2; n <= 30; ++n) {
    Rational s;
    for (long long r = 1; r <= n; ++r) s += Rational(r - 1, n - 1);
    EXPECT_EQ(s / Rational(n), Rational(1, 2));
  }
  EXPECT_NEAR(baseline_dcg_bound(2), 0.340, 5e-4);
  EXPECT_NEAR(baseline_dcg_bound(3), 0.262, 5e-4);
  EXPECT_NEAR(baseline_dcg_excess(3), 0.1309, 5e-5);
  for (std::size_t n = 2; n <= 1000; ++n) {
    EXPECT_LE(baseline_dcg_excess(n), baseline_dcg_excess(3));
    if (n > 2) {
      EXPECT_LT(baseline_dcg_bound(n), baseline_dcg_bound(n - 1)) << n;
    }
  }
  EXPECT_NEAR(random_rank_dcg_expectation(3), 0.4206, 5e-5);
  EXPECT_THROW(baseline_dcg_bound(1), input_error);
}

TEST(MonteCarlo, StarsOfTwo) {
  std::vector<std::size_t> lengths(50, 2);
  auto mc = monte_carlo_baseline(lengths, 7, 4000);
  EXPECT_NEAR(mc.precision.mean, 0.5, 3 * mc.precision.standard_error + 1e-9);
  EXPECT_NEAR(mc.normalized_rank.mean, 0.5, 3 * mc.normalized_rank.standard_error + 1e-9);
  EXPECT_EQ(mc.analytic_precision, Rational(1, 2));
}

TEST(MonteCarlo, DeterministicForSeed) {
  std::vector<std::size_t> lengths{3, 4, 5, 9, 12, 20};
  auto a = monte_carlo_baseline(lengths, 123, 500);
  auto b = monte_carlo_baseline(lengths, 123, 500);
  EXPECT_EQ(a.precision.mean, b.precision.mean);
  EXPECT_EQ(a.normalized_rank.mean, b.normalized_rank.mean);
  EXPECT_EQ(a.normalized_dcg.mean, b.normalized_dcg.mean);
  auto c = monte_carlo_baseline(lengths, 124, 500);
  EXPECT_NE(a.precision.mean, c.precision.mean);
  EXPECT_NEAR(a.precision.mean, a.analytic_precision.to_double(), 4 * a.precision.standard_error);
  EXPECT_THROW(monte_carlo_baseline(lengths, 1, 0), input_error);
}

TEST(SummarizeDistribution, Examples) {
  auto s = summarize_distribution(std::vector<double>{1, 2, 3});
  EXPECT_DOUBLE_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.mean, 2);
  EXPECT_DOUBLE_EQ(s.median, 2);
  EXPECT_DOUBLE_EQ(s.max, 3);
  EXPECT_DOUBLE_EQ(s.sd, 1);
  EXPECT_DOUBLE_EQ(summarize_distribution(std::vector<double>(5, 0.4)).sd, 0);
  EXPECT_DOUBLE_EQ(summarize_distribution(std::vector<double>{4, 1, 3, 2}).median, 2.5);
}

TEST(BoxplotStats, Examples) {
  auto b = boxplot_stats(std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_DOUBLE_EQ(b.median, 5);
  EXPECT_DOUBLE_EQ(b.q1, 3);
  EXPECT_DOUBLE_EQ(b.q3, 7);
  EXPECT_DOUBLE_EQ(b.whisker_lo, 1);
  EXPECT_DOUBLE_EQ(b.whisker_hi, 9);
  EXPECT_TRUE(b.outliers.empty());
  auto o = boxplot_stats(std::vector<double>{1, 1, 1, 1, 100});
  EXPECT_EQ(o.outliers, std::vector<double>{100});
  EXPECT_DOUBLE_EQ(o.whisker_hi, 1);
  auto single = boxplot_stats(std::vector<double>{0.7});
  for (double x : {single.median, single.q1, single.q3, single.whisker_lo, single.whisker_hi}) EXPECT_DOUBLE_EQ(x, 0.7);
  EXPECT_TRUE(single.outliers.empty());
}

TEST(KendallTau, Examples) {
  std::vector<double> x{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(kendall_tau(x, std::vector<double>{2, 5, 7, 9}), 1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(x, std::vector<double>{9, 7, 5, 2}), -1.0);
  // Path trees, degree recall over n = 3..6.
  std::vector<Rational> n{3, 4, 5, 6};
  std::vector<Rational> recall{Rational(30, 36), Rational(68, 70), Rational(43, 43), Rational(27, 27)};
  EXPECT_NEAR(kendall_tau(n, recall), 5 / std::sqrt(30.0), 1e-12);
  EXPECT_EQ(format_decimal(kendall_tau(n, recall)), "0.913");
  std::vector<Rational> precision{Rational(30, 36), Rational(68, 140), Rational(43, 129), Rational(27, 108)};
  EXPECT_DOUBLE_EQ(kendall_tau(n, precision), -1.0);
  EXPECT_THROW(kendall_tau(x, std::vector<double>(4, 1.0)), undefined_correlation_error);
  EXPECT_THROW(kendall_tau(x, std::vector<double>{1, 2}), input_error);
}

// --- properties --------------------------------------------------------------------

TEST(EvaluationProperty, TieAveragedRanksSumToTriangularNumber) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 20;
    SentenceStructure s(random_tree(n, rng), random_arrangement(n, rng), 1);
    for (MeasureId m : all_measures()) {
      auto vec = score(s, m);
      Rational sum;
      for (Vertex v = 1; v <= n; ++v) {
        auto r = rank_root(vec, v);
        sum += r.raw_rank;
        EXPECT_GE(r.normalized_rank, Rational(0));
        EXPECT_LE(r.normalized_rank, Rational(1));
        EXPECT_GE(r.normalized_dcg, -1e-12);
        EXPECT_LE(r.normalized_dcg, 1 + 1e-12);
      }
      EXPECT_EQ(sum, Rational(static_cast<long long>(n * (n + 1)), 2));
    }
  }
}

TEST(EvaluationProperty, MonotoneTransformLeavesOutcomesUnchanged) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 3 + trial % 20;
    SentenceStructure s(random_tree(n, rng), random_arrangement(n, rng), 1 + trial % 3);
    for (MeasureId m : default_ensemble()) {
      auto vec = score(s, m);
      auto t = vec;
      for (auto& x : t.values) x = x * x * x + Rational(5, 3);  // strictly increasing
      EXPECT_EQ(rank_root(vec, s.root).raw_rank, rank_root(t, s.root).raw_rank);
      EXPECT_EQ(classify_roots(vec, s.root).guesses, classify_roots(t, s.root).guesses);
    }
  }
}

TEST(EvaluationProperty, PrecisionBoundAndUniqueCenters) {
  std::mt19937_64 rng(35);
  std::vector<SentenceStructure> sentences;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 3 + i % 12;
    std::uniform_int_distribution<Vertex> pick(1, n);
    sentences.emplace_back(random_tree(n, rng), random_arrangement(n, rng), pick(rng));
  }
  auto rep = evaluate("", sentences, all_measures());
  for (const auto& mr : rep.measures) {
    const auto& t = mr.tally;
    EXPECT_LE(t.hits, t.sentences);
    EXPECT_LE(t.hits, t.guesses);
    EXPECT_GE(t.guesses, t.sentences);
    EXPECT_LE(t.precision(), t.ns_over_nm());
    if (t.guesses == t.sentences) {
      EXPECT_EQ(t.precision(), t.recall());
      EXPECT_EQ(t.precision(), t.f_measure());
    }
  }
  // Paths of odd length have a unique middle under max-subtree-size.
  std::vector<SentenceStructure> odd_paths;
  for (std::size_t n = 3; n < 30; n += 2) odd_paths.emplace_back(make_path(n), LinearArrangement::identity(n), 1);
  auto mr = tally(odd_paths, MeasureId::MaxSubtreeSize);
  EXPECT_EQ(mr.tally.precision(), mr.tally.recall());
  EXPECT_EQ(mr.tally.f_measure(), mr.tally.recall());
}
