#pragma once

// Short sentences pooled across languages: strata by length and by
// (length, tree kind), the representative measures of each stratum, and
// Kendall tau of performance against length and against hubiness.

#include "rootness/centrality.hpp"
#include "rootness/consistency.hpp"
#include "rootness/evaluation.hpp"
#include "rootness/tree_kind.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rootness {

inline std::vector<MeasureId> spatial_measures() {
  return {MeasureId::SumEdgeDistances, MeasureId::Coverage, MeasureId::CorrectedSumEdgeDistances,
          MeasureId::Straightness};
}

namespace detail {

/// Spatial scores to report next to the non-spatial representatives. On
/// stars D and D' always pick the hub, like degree, so they are dropped.
inline void append_spatial(std::vector<MeasureId>& out, bool stars_only) {
  for (MeasureId m : spatial_measures()) {
    if (stars_only && (m == MeasureId::SumEdgeDistances || m == MeasureId::CorrectedSumEdgeDistances)) continue;
    out.push_back(m);
  }
}

}  // namespace detail

/// Representatives for all trees of size n.
inline std::vector<MeasureId> size_stratum_measures(std::size_t n) {
  auto out = minimal_representatives(n);
  bool stars_only = true;
  for (const auto& t : enumerate_free_trees(n)) stars_only = stars_only && is_star(t);
  detail::append_spatial(out, stars_only);
  return out;
}

/// Representatives for one unlabelled tree.
inline std::vector<MeasureId> tree_stratum_measures(const FreeTree& t) {
  auto ms = non_spatial_ensemble();
  auto out = classes_of(t, ms).representatives();
  detail::append_spatial(out, is_star(t));
  return out;
}

/// Representatives for a kind regardless of size: degree alone for stars,
/// degree and eccentricity for paths.
inline std::vector<MeasureId> kind_series_measures(TreeKind kind) {
  std::vector<MeasureId> out{MeasureId::Degree};
  if (kind == TreeKind::Path) out.push_back(MeasureId::Eccentricity);
  detail::append_spatial(out, kind == TreeKind::Star);
  return out;
}

struct StratumRow {
  std::size_t n = 0;
  std::string kind;  // empty when stratified by size only
  Rational hubiness;
  std::size_t sentences = 0;
  std::optional<Rational> baseline;
  std::vector<MeasureReport> measures;  // empty tallies when the stratum is empty
};

namespace detail {

struct ShortCorpus {
  std::vector<const SentenceStructure*> sentences;
  std::vector<std::vector<SentenceOutcome>> outcomes;  // indexed like all_measures()
};

inline ShortCorpus score_short(std::span<const SentenceStructure> pooled, std::size_t n_lo, std::size_t n_hi,
                               unsigned jobs) {
  ShortCorpus c;
  std::vector<SentenceStructure> picked;
  for (const auto& s : pooled)
    if (s.size() >= n_lo && s.size() <= n_hi) {
      c.sentences.push_back(&s);
      picked.push_back(s);
    }
  auto ms = all_measures();
  c.outcomes = evaluate_sentences(picked, ms, jobs);
  return c;
}

inline StratumRow make_row(std::size_t n, std::string kind, Rational hub, const ShortCorpus& c,
                           const std::vector<std::size_t>& members, const std::vector<MeasureId>& measures) {
  StratumRow row{n, std::move(kind), hub, members.size(), std::nullopt, {}};
  std::vector<std::vector<SentenceOutcome>> sub;
  for (auto i : members) sub.push_back(c.outcomes[i]);
  if (!sub.empty()) {
    std::vector<std::size_t> lengths(sub.size(), n);
    row.baseline = baseline_classifier_expectation(lengths);
  }
  for (MeasureId m : measures) {
    const auto k = static_cast<std::size_t>(m);
    MeasureReport mr;
    mr.measure = m;
    std::vector<std::vector<SentenceOutcome>> one;
    for (const auto& o : sub) one.push_back({o[k]});
    const MeasureId single[] = {m};
    if (!one.empty()) mr = summarize_outcomes("", one, single).measures.front();
    row.measures.push_back(std::move(mr));
  }
  return row;
}

}  // namespace detail

/// One row per length (or per length and unlabelled tree, in order of
/// increasing hubiness). Strata without sentences are kept with N_S = 0.
inline std::vector<StratumRow> short_sentence_table(std::span<const SentenceStructure> pooled, std::size_t n_lo,
                                                    std::size_t n_hi, bool by_kind, unsigned jobs = 1) {
  if (n_lo < 3 || n_hi > 6 || n_lo > n_hi) throw input_error("short-sentence strata need 3 <= n_lo <= n_hi <= 6");
  auto corpus = detail::score_short(pooled, n_lo, n_hi, jobs);
  std::vector<StratumRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    if (!by_kind) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < corpus.sentences.size(); ++i)
        if (corpus.sentences[i]->size() == n) members.push_back(i);
      rows.push_back(detail::make_row(n, "", Rational(0), corpus, members, size_stratum_measures(n)));
      continue;
    }
    std::map<std::string, std::vector<std::size_t>> by_code;
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i)
      if (corpus.sentences[i]->size() == n) by_code[canonical_code(corpus.sentences[i]->tree)].push_back(i);
    for (const auto& tc : equivalence_classes(n))
      rows.push_back(detail::make_row(n, tc.label.name(), tc.label.hubiness, corpus, by_code[tc.code],
                                      tree_stratum_measures(tc.tree)));
  }
  return rows;
}

enum class Metric { Precision, Recall, F };

inline std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::Precision: return "precision";
    case Metric::Recall: return "recall";
    default: return "F-measure";
  }
}

inline Rational metric_value(const ClassifierTally& t, Metric m) {
  switch (m) {
    case Metric::Precision: return t.precision();
    case Metric::Recall: return t.recall();
    default: return t.f_measure();
  }
}

struct TauRow {
  std::string series;  // tree kind, or the length n
  MeasureId measure = MeasureId::Degree;
  Metric metric = Metric::Precision;
  std::size_t points = 0;
  std::optional<double> tau;  // empty when a variable is constant or points < 2
};

namespace detail {

inline std::optional<double> safe_tau(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  if (x.size() < 2) return std::nullopt;
  try {
    return kendall_tau(x, y);
  } catch (const undefined_correlation_error&) {
    return std::nullopt;
  }
}

inline ClassifierTally tally_of(const ShortCorpus& c, const std::vector<std::size_t>& members, MeasureId m) {
  ClassifierTally t;
  for (auto i : members) {
    const auto& o = c.outcomes[i][static_cast<std::size_t>(m)];
    t.add(o.guesses, o.hit);
  }
  return t;
}

}  // namespace detail

/// Tau between n and performance, for stars and for paths. A tree belongs to
/// every kind whose definition it meets, so the 3-vertex tree counts in both.
inline std::vector<TauRow> tau_versus_size(std::span<const SentenceStructure> pooled, std::size_t n_lo = 3,
                                           std::size_t n_hi = 6, unsigned jobs = 1) {
  auto corpus = detail::score_short(pooled, n_lo, n_hi, jobs);
  std::vector<TauRow> rows;
  for (TreeKind kind : {TreeKind::Star, TreeKind::Path}) {
    auto member = [kind](const FreeTree& t) { return kind == TreeKind::Star ? is_star(t) : is_path(t); };
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> points;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < corpus.sentences.size(); ++i)
        if (corpus.sentences[i]->size() == n && member(corpus.sentences[i]->tree)) members.push_back(i);
      if (!members.empty()) points.emplace_back(n, std::move(members));
    }
    for (MeasureId m : kind_series_measures(kind))
      for (Metric metric : {Metric::Precision, Metric::Recall, Metric::F}) {
        std::vector<Rational> x, y;
        for (const auto& [n, members] : points) {
          x.emplace_back(static_cast<long long>(n));
          y.push_back(metric_value(detail::tally_of(corpus, members, m), metric));
        }
        rows.push_back({kind == TreeKind::Star ? "star" : "path", m, metric, x.size(), detail::safe_tau(x, y)});
      }
  }
  return rows;
}

/// Tau between hubiness and performance over the unlabelled trees of each
/// length that occur in the data.
inline std::vector<TauRow> tau_versus_hubiness(std::span<const SentenceStructure> pooled, std::size_t n_lo = 3,
                                               std::size_t n_hi = 6, unsigned jobs = 1) {
  auto corpus = detail::score_short(pooled, n_lo, n_hi, jobs);
  std::vector<TauRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    auto trees = equivalence_classes(n);
    if (trees.size() < 2) continue;
    std::map<std::string, std::vector<std::size_t>> by_code;
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i)
      if (corpus.sentences[i]->size() == n) by_code[canonical_code(corpus.sentences[i]->tree)].push_back(i);
    auto measures = minimal_representatives(n);
    detail::append_spatial(measures, false);
    for (MeasureId m : measures)
      for (Metric metric : {Metric::Precision, Metric::Recall, Metric::F}) {
        std::vector<Rational> x, y;
        for (const auto& tc : trees) {
          const auto& members = by_code[tc.code];
          if (members.empty()) continue;
          x.push_back(tc.label.hubiness);
          y.push_back(metric_value(detail::tally_of(corpus, members, m), metric));
        }
        rows.push_back({std::to_string(n), m, metric, x.size(), detail::safe_tau(x, y)});
      }
  }
  return rows;
}

}  // namespace rootness
