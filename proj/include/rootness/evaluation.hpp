#pragma once

// Centrality measures as root rankers and root classifiers, random
// baselines and the summary statistics used in reports.

#include "rootness/centrality.hpp"
#include "rootness/errors.hpp"
#include "rootness/rational.hpp"
#include "rootness/tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <thread>
#include <vector>

namespace rootness {

// --- ranking ---------------------------------------------------------------------------

struct RankOutcome {
  Rational raw_rank;         // tie-averaged, in [1, n]
  Rational normalized_rank;  // (r - 1)/(n - 1)
  double dcg = 0;            // 1/log2(r + 1)
  double normalized_dcg = 0;
};

/// DCG of the last rank, the normalisation floor.
inline double dcg_min(std::size_t n) { return 1.0 / std::log2(static_cast<double>(n) + 1.0); }

inline double normalized_dcg(const Rational& rank, std::size_t n) {
  const double lo = dcg_min(n);
  return (1.0 / std::log2(rank.to_double() + 1.0) - lo) / (1.0 - lo);
}

inline RankOutcome rank_root(const CentralityVector& vec, Vertex root) {
  const std::size_t n = vec.size();
  if (root < 1 || root > n) throw input_error("root " + std::to_string(root) + " outside score vector");
  if (n < 2) throw undefined_score_error("ranks cannot be normalised for a single vertex");
  const Rational& r = vec.value(root);
  long long better = 0, tied = 0;
  for (const auto& x : vec.values) {
    if (vec.better(x, r)) ++better;
    else if (x == r) ++tied;
  }
  // Tie block [better + 1, better + tied].
  RankOutcome out;
  out.raw_rank = Rational(2 * better + tied + 1, 2);
  out.normalized_rank = (out.raw_rank - Rational(1)) / Rational(static_cast<long long>(n - 1));
  out.dcg = 1.0 / std::log2(out.raw_rank.to_double() + 1.0);
  out.normalized_dcg = normalized_dcg(out.raw_rank, n);
  return out;
}

// --- classification --------------------------------------------------------------------

struct Classification {
  std::vector<Vertex> guesses;
  bool hit = false;
};

inline Classification classify_roots(const CentralityVector& vec, Vertex root) {
  Classification c{centers(vec), false};
  c.hit = std::binary_search(c.guesses.begin(), c.guesses.end(), root);
  return c;
}

struct ClassifierTally {
  std::size_t sentences = 0;  // N_S
  std::size_t guesses = 0;    // N_M
  std::size_t hits = 0;       // h

  void add(std::size_t g, bool hit) {
    ++sentences;
    guesses += g;
    hits += hit ? 1 : 0;
  }

  ClassifierTally& operator+=(const ClassifierTally& o) {
    sentences += o.sentences;
    guesses += o.guesses;
    hits += o.hits;
    return *this;
  }

  Rational precision() const { return guesses ? Rational(ll(hits), ll(guesses)) : Rational(0); }
  Rational recall() const { return sentences ? Rational(ll(hits), ll(sentences)) : Rational(0); }
  Rational fdr() const { return Rational(1) - precision(); }
  /// 2h/(N_S + N_M), the harmonic mean of precision and recall; 0 when h = 0.
  Rational f_measure() const { return hits ? Rational(2 * ll(hits), ll(sentences + guesses)) : Rational(0); }
  /// Upper bound of precision.
  Rational ns_over_nm() const { return guesses ? Rational(ll(sentences), ll(guesses)) : Rational(0); }

 private:
  static long long ll(std::size_t x) { return static_cast<long long>(x); }
};

// --- baselines -----------------------------------------------------------------------

/// Expected precision (= recall) of guessing one uniformly random vertex:
/// (1/N_S) sum 1/n_i.
inline Rational baseline_classifier_expectation(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw input_error("no sentence lengths");
  Rational s;
  for (auto n : lengths) {
    if (n == 0) throw input_error("sentence length must be positive");
    s += Rational(1, static_cast<long long>(n));
  }
  return s / Rational(static_cast<long long>(lengths.size()));
}

/// Expected normalised rank of the root under a random ranking.
inline Rational baseline_rank_expectation() { return Rational(1, 2); }

/// 1/log2((n+3)/2) - 1/log2(n+1): DCG of the mean random rank (n+1)/2 above
/// the floor, before normalisation. Peaks at n = 3.
inline double baseline_dcg_excess(std::size_t n) {
  if (n < 2) throw input_error("DCG bound needs n >= 2");
  const double nd = static_cast<double>(n);
  return 1.0 / std::log2((nd + 3.0) / 2.0) - dcg_min(n);
}

/// The same excess normalised by 1 - DCG_min.
inline double baseline_dcg_bound(std::size_t n) {
  if (n < 2) throw input_error("DCG bound needs n >= 2");
  return baseline_dcg_excess(n) / (1.0 - dcg_min(n));
}

/// Exact mean of the normalised DCG when the root's rank is uniform on 1..n.
inline double random_rank_dcg_expectation(std::size_t n) {
  if (n < 2) throw input_error("DCG expectation needs n >= 2");
  double s = 0;
  for (std::size_t r = 1; r <= n; ++r) s += normalized_dcg(Rational(static_cast<long long>(r)), n);
  return s / static_cast<double>(n);
}

struct Estimate {
  double mean = 0;
  double standard_error = 0;
};

struct MonteCarloBaseline {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Estimate precision;  // one guess per sentence: recall and F coincide
  Estimate normalized_rank;
  Estimate normalized_dcg;
  Rational analytic_precision;
  Rational analytic_rank;
};

/// Simulates the random baseline over a collection given by its sentence
/// lengths. Each trial guesses one uniform vertex per sentence and places
/// the root at a uniform rank. The root is vertex 1 without loss of generality.
inline MonteCarloBaseline monte_carlo_baseline(std::span<const std::size_t> lengths, std::uint64_t seed,
                                               std::size_t trials) {
  if (trials == 0) throw input_error("need at least one trial");
  if (lengths.empty()) throw input_error("no sentence lengths");
  for (auto n : lengths)
    if (n < 2) throw input_error("random ranks need sentences of length >= 2");
  std::mt19937_64 rng(seed);
  std::vector<double> prec(trials), rank(trials), dcg(trials);
  const double ns = static_cast<double>(lengths.size());
  for (std::size_t t = 0; t < trials; ++t) {
    double hits = 0, rsum = 0, dsum = 0;
    for (auto n : lengths) {
      std::uniform_int_distribution<std::size_t> pick(1, n);
      hits += pick(rng) == 1 ? 1 : 0;
      const std::size_t r = pick(rng);
      rsum += static_cast<double>(r - 1) / static_cast<double>(n - 1);
      dsum += normalized_dcg(Rational(static_cast<long long>(r)), n);
    }
    prec[t] = hits / ns;
    rank[t] = rsum / ns;
    dcg[t] = dsum / ns;
  }
  auto estimate = [&](const std::vector<double>& xs) {
    Estimate e;
    e.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(trials);
    if (trials > 1) {
      double ss = 0;
      for (double x : xs) ss += (x - e.mean) * (x - e.mean);
      e.standard_error = std::sqrt(ss / static_cast<double>(trials - 1)) / std::sqrt(static_cast<double>(trials));
    }
    return e;
  };
  MonteCarloBaseline out;
  out.seed = seed;
  out.trials = trials;
  out.precision = estimate(prec);
  out.normalized_rank = estimate(rank);
  out.normalized_dcg = estimate(dcg);
  out.analytic_precision = baseline_classifier_expectation(lengths);
  out.analytic_rank = baseline_rank_expectation();
  return out;
}

// --- per-measure evaluation over a set of sentences -------------------------------------

struct SentenceOutcome {
  std::size_t n = 0;
  std::size_t guesses = 0;
  bool hit = false;
  RankOutcome rank;
};

/// Outcomes of one sentence for each measure, in the order given.
inline std::vector<SentenceOutcome> evaluate_sentence(const SentenceStructure& s, std::span<const MeasureId> measures) {
  Scorer scorer(s);
  std::vector<SentenceOutcome> out;
  out.reserve(measures.size());
  for (MeasureId m : measures) {
    CentralityVector vec = scorer.score(m);
    Classification c = classify_roots(vec, s.root);
    out.push_back({s.size(), c.guesses.size(), c.hit, rank_root(vec, s.root)});
  }
  return out;
}

template <typename T>
T median_of(std::vector<T> xs) {
  if (xs.empty()) throw input_error("median of an empty list");
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  if (xs.size() % 2) return xs[m];
  return (xs[m - 1] + xs[m]) / T(2);
}

struct MeasureReport {
  MeasureId measure = MeasureId::Degree;
  ClassifierTally tally;
  Rational mean_rank, median_rank;
  double mean_dcg = 0, median_dcg = 0;
};

struct EvalReport {
  std::string group;
  std::size_t sentences = 0;
  Rational baseline;  // expected precision of the random guess
  std::vector<MeasureReport> measures;
};

/// Scores every sentence for every measure. `jobs` worker threads fill
/// per-sentence slots; the reduction afterwards is sequential so the result
/// does not depend on scheduling.
inline std::vector<std::vector<SentenceOutcome>> evaluate_sentences(std::span<const SentenceStructure> sentences,
                                                                    std::span<const MeasureId> measures,
                                                                    unsigned jobs = 1) {
  std::vector<std::vector<SentenceOutcome>> slots(sentences.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, sentences.size()))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < sentences.size(); ++i) slots[i] = evaluate_sentence(sentences[i], measures);
    return slots;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < sentences.size(); i += jobs) slots[i] = evaluate_sentence(sentences[i], measures);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return slots;
}

inline EvalReport summarize_outcomes(std::string group, std::span<const std::vector<SentenceOutcome>> outcomes,
                                     std::span<const MeasureId> measures) {
  EvalReport rep;
  rep.group = std::move(group);
  rep.sentences = outcomes.size();
  if (!outcomes.empty()) {
    std::vector<std::size_t> lengths;
    for (const auto& o : outcomes) lengths.push_back(o.front().n);
    rep.baseline = baseline_classifier_expectation(lengths);
  }
  for (std::size_t k = 0; k < measures.size(); ++k) {
    MeasureReport mr;
    mr.measure = measures[k];
    std::vector<Rational> ranks;
    std::vector<double> dcgs;
    for (const auto& o : outcomes) {
      mr.tally.add(o[k].guesses, o[k].hit);
      ranks.push_back(o[k].rank.normalized_rank);
      dcgs.push_back(o[k].rank.normalized_dcg);
    }
    if (!ranks.empty()) {
      Rational sum;
      for (const auto& r : ranks) sum += r;
      mr.mean_rank = sum / Rational(static_cast<long long>(ranks.size()));
      mr.median_rank = median_of(ranks);
      mr.mean_dcg = std::accumulate(dcgs.begin(), dcgs.end(), 0.0) / static_cast<double>(dcgs.size());
      mr.median_dcg = median_of(dcgs);
    }
    rep.measures.push_back(std::move(mr));
  }
  return rep;
}

inline EvalReport evaluate(std::string group, std::span<const SentenceStructure> sentences,
                           std::span<const MeasureId> measures, unsigned jobs = 1) {
  auto outcomes = evaluate_sentences(sentences, measures, jobs);
  return summarize_outcomes(std::move(group), outcomes, measures);
}

/// Tally and rank statistics of one measure.
inline MeasureReport tally(std::span<const SentenceStructure> sentences, MeasureId m) {
  if (sentences.empty()) throw input_error("empty collection");
  const MeasureId ms[] = {m};
  return evaluate("", sentences, ms).measures.front();
}

// --- summary statistics ----------------------------------------------------------------

struct DistributionSummary {
  double min = 0, mean = 0, median = 0, max = 0, sd = 0;
};

/// sd uses the n-1 denominator and is 0 for a single value.
inline DistributionSummary summarize_distribution(std::span<const double> values) {
  if (values.empty()) throw input_error("no values to summarize");
  DistributionSummary s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  s.median = median_of(std::vector<double>(values.begin(), values.end()));
  if (values.size() > 1) {
    double ss = 0;
    for (double x : values) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

struct BoxplotStats {
  double median = 0, q1 = 0, q3 = 0, whisker_lo = 0, whisker_hi = 0;
  std::vector<double> outliers;
};

/// Quantile by linear interpolation between order statistics (type 7).
inline double quantile(std::vector<double> sorted, double p) {
  if (sorted.empty()) throw input_error("quantile of an empty list");
  std::sort(sorted.begin(), sorted.end());
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

/// Hinges at the quartiles; whiskers reach the most extreme values within
/// 1.5 IQR of the hinges; anything beyond is an outlier.
inline BoxplotStats boxplot_stats(std::span<const double> values) {
  if (values.empty()) throw input_error("no values for a boxplot");
  std::vector<double> xs(values.begin(), values.end());
  std::sort(xs.begin(), xs.end());
  BoxplotStats b;
  b.q1 = quantile(xs, 0.25);
  b.median = quantile(xs, 0.5);
  b.q3 = quantile(xs, 0.75);
  const double iqr = b.q3 - b.q1, lo = b.q1 - 1.5 * iqr, hi = b.q3 + 1.5 * iqr;
  b.whisker_lo = b.q1;
  b.whisker_hi = b.q3;
  bool any = false;
  for (double x : xs) {
    if (x < lo || x > hi) {
      b.outliers.push_back(x);
      continue;
    }
    if (!any) b.whisker_lo = b.whisker_hi = x;
    any = true;
    b.whisker_lo = std::min(b.whisker_lo, x);
    b.whisker_hi = std::max(b.whisker_hi, x);
  }
  return b;
}

/// Kendall tau-b. Throws when either variable is constant.
template <typename T>
double kendall_tau(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw input_error("kendall_tau: lengths differ");
  if (x.size() < 2) throw input_error("kendall_tau: need at least two pairs");
  long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const int sx = x[i] < x[j] ? -1 : (x[j] < x[i] ? 1 : 0);
      const int sy = y[i] < y[j] ? -1 : (y[j] < y[i] ? 1 : 0);
      if (sx == 0) ++ties_x;
      if (sy == 0) ++ties_y;
      if (sx == 0 || sy == 0) continue;
      if (sx == sy) ++concordant;
      else ++discordant;
    }
  const long long pairs = static_cast<long long>(x.size() * (x.size() - 1) / 2);
  const long long px = pairs - ties_x, py = pairs - ties_y;
  if (px == 0 || py == 0) throw undefined_correlation_error("kendall_tau: a variable has no untied pairs");
  return static_cast<double>(concordant - discordant) / std::sqrt(static_cast<double>(px) * static_cast<double>(py));
}

template <typename T>
double kendall_tau(const std::vector<T>& x, const std::vector<T>& y) {
  return kendall_tau(std::span<const T>(x), std::span<const T>(y));
}

}  // namespace rootness
