#pragma once

// The centrality ensemble. Every score is kept exact: integer-valued scores
// are stored as Rationals with unit denominator so that ties are decided by
// value equality, never by floating-point coincidence.

#include "rootness/rational.hpp"
#include "rootness/tree.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rootness {

enum class MeasureId {
  Degree,
  Eccentricity,
  MeanDistance,
  PopularCloseness,
  NewmanCloseness,
  Betweenness,
  MaxSubtreeSize,
  SecondMomentSubtrees,
  AllSubgraphs,
  SumEdgeDistances,
  Coverage,
  CorrectedSumEdgeDistances,
  Straightness,
};

enum class Direction { Maximize, Minimize };

struct MeasureInfo {
  MeasureId id;
  std::string_view name;   // command-line name
  std::string_view label;  // short table label
  Direction direction;
  bool spatial;
  std::size_t min_n;  // smallest tree on which the score is defined
};

inline constexpr std::array<MeasureInfo, 13> kMeasures{{
    {MeasureId::Degree, "degree", "k", Direction::Maximize, false, 1},
    {MeasureId::Eccentricity, "eccentricity", "eccentricity", Direction::Minimize, false, 1},
    {MeasureId::MeanDistance, "mean-distance", "l", Direction::Minimize, false, 2},
    {MeasureId::PopularCloseness, "closeness", "closeness", Direction::Maximize, false, 2},
    {MeasureId::NewmanCloseness, "newman-closeness", "newman closeness", Direction::Maximize, false, 2},
    {MeasureId::Betweenness, "betweenness", "betweenness", Direction::Maximize, false, 1},
    {MeasureId::MaxSubtreeSize, "max-subtree-size", "n_max", Direction::Minimize, false, 2},
    {MeasureId::SecondMomentSubtrees, "subtree-m2", "m2", Direction::Minimize, false, 2},
    {MeasureId::AllSubgraphs, "all-subgraphs", "all-subgraphs", Direction::Maximize, false, 1},
    {MeasureId::SumEdgeDistances, "sum-edge-distances", "D", Direction::Maximize, true, 1},
    {MeasureId::Coverage, "coverage", "coverage", Direction::Maximize, true, 2},
    {MeasureId::CorrectedSumEdgeDistances, "corrected-sum-edge-distances", "D'", Direction::Maximize, true, 2},
    {MeasureId::Straightness, "straightness", "straightness", Direction::Maximize, true, 2},
}};

inline const MeasureInfo& info(MeasureId id) { return kMeasures[static_cast<std::size_t>(id)]; }
inline std::string_view name(MeasureId id) { return info(id).name; }
inline std::string_view label(MeasureId id) { return info(id).label; }
inline Direction direction(MeasureId id) { return info(id).direction; }
inline bool is_spatial(MeasureId id) { return info(id).spatial; }

/// Accepts the command-line name or the table label.
inline std::optional<MeasureId> parse_measure(std::string_view s) {
  for (const auto& m : kMeasures)
    if (s == m.name || s == m.label) return m.id;
  return std::nullopt;
}

inline std::vector<MeasureId> all_measures() {
  std::vector<MeasureId> out;
  for (const auto& m : kMeasures) out.push_back(m.id);
  return out;
}

/// The eleven scores evaluated as root guessers.
inline std::vector<MeasureId> default_ensemble() {
  return {MeasureId::Degree,           MeasureId::Eccentricity,         MeasureId::NewmanCloseness,
          MeasureId::Betweenness,      MeasureId::MaxSubtreeSize,       MeasureId::SecondMomentSubtrees,
          MeasureId::AllSubgraphs,     MeasureId::SumEdgeDistances,     MeasureId::Coverage,
          MeasureId::CorrectedSumEdgeDistances, MeasureId::Straightness};
}

/// Non-spatial members of the default ensemble.
inline std::vector<MeasureId> non_spatial_ensemble() {
  std::vector<MeasureId> out;
  for (MeasureId m : default_ensemble())
    if (!is_spatial(m)) out.push_back(m);
  return out;
}

struct CentralityVector {
  MeasureId measure;
  Direction direction;
  std::vector<Rational> values;  // values[v-1]

  std::size_t size() const noexcept { return values.size(); }
  const Rational& value(Vertex v) const { return values.at(v - 1); }

  /// True iff a is strictly more central than b under this direction.
  bool better(const Rational& a, const Rational& b) const {
    return direction == Direction::Maximize ? a > b : a < b;
  }
};

namespace detail {

inline void require_size(const FreeTree& tree, MeasureId m) {
  if (tree.size() < info(m).min_n)
    throw undefined_score_error(std::string(name(m)) + " is undefined for trees with fewer than " +
                                std::to_string(info(m).min_n) + " vertices");
}

inline std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

inline std::size_t distance_sum(const std::vector<std::size_t>& dist) {
  std::size_t s = 0;
  for (auto d : dist) s += d;
  return s;
}

// sum_{u != v} 1/delta(u,v), grouping vertices by distance.
inline Rational reciprocal_distance_sum(const std::vector<std::size_t>& dist) {
  std::vector<long long> count(dist.size() + 1, 0);
  for (auto d : dist)
    if (d > 0) ++count[d];
  Rational s;
  for (std::size_t t = 1; t < count.size(); ++t)
    if (count[t] != 0) s += Rational(count[t], static_cast<long long>(t));
  return s;
}

// sum_{u != v} |pi(u)-pi(v)| / delta(u,v), grouping by delta.
inline Rational distance_ratio_sum(const LinearArrangement& arr, Vertex v, const std::vector<std::size_t>& dist) {
  std::vector<long long> spatial(dist.size() + 1, 0);
  const std::size_t pv = arr.position(v);
  for (Vertex u = 1; u <= dist.size(); ++u)
    if (u != v) spatial[dist[u - 1]] += static_cast<long long>(absdiff(arr.position(u), pv));
  Rational s;
  for (std::size_t t = 1; t < spatial.size(); ++t)
    if (spatial[t] != 0) s += Rational(spatial[t], static_cast<long long>(t));
  return s;
}

inline long long betweenness_from_sizes(std::size_t n, const std::vector<std::size_t>& sizes) {
  long long sq = 0;
  for (auto s : sizes) sq += static_cast<long long>(s * s);
  const auto m = static_cast<long long>(n - 1);
  return (m * m - sq) / 2;
}

inline Rational second_moment(const std::vector<std::size_t>& sizes) {
  long long sq = 0;
  for (auto s : sizes) sq += static_cast<long long>(s * s);
  return Rational(sq, static_cast<long long>(sizes.size()));
}

}  // namespace detail

// --- per-vertex scores --------------------------------------------------------

inline std::size_t eccentricity(const FreeTree& tree, Vertex v) {
  auto dist = distances_from(tree, v);
  return *std::max_element(dist.begin(), dist.end());
}

inline Rational mean_distance(const FreeTree& tree, Vertex v) {
  detail::require_size(tree, MeasureId::MeanDistance);
  auto sum = detail::distance_sum(distances_from(tree, v));
  return Rational(static_cast<long long>(sum), static_cast<long long>(tree.size() - 1));
}

inline Rational popular_closeness(const FreeTree& tree, Vertex v) {
  detail::require_size(tree, MeasureId::PopularCloseness);
  return Rational(1, static_cast<long long>(detail::distance_sum(distances_from(tree, v))));
}

inline Rational newman_closeness(const FreeTree& tree, Vertex v) {
  detail::require_size(tree, MeasureId::NewmanCloseness);
  return detail::reciprocal_distance_sum(distances_from(tree, v)) /
         Rational(static_cast<long long>(tree.size() - 1));
}

/// Closed form 1/2[(n-1)^2 - sum n_i^2].
inline long long betweenness(const FreeTree& tree, Vertex v) {
  return detail::betweenness_from_sizes(tree.size(), subtree_sizes(tree, v));
}

inline std::size_t max_subtree_size(const FreeTree& tree, Vertex v) {
  detail::require_size(tree, MeasureId::MaxSubtreeSize);
  return subtree_sizes(tree, v).back();
}

inline Rational second_moment_subtrees(const FreeTree& tree, Vertex v) {
  detail::require_size(tree, MeasureId::SecondMomentSubtrees);
  return detail::second_moment(subtree_sizes(tree, v));
}

/// Number of connected vertex subsets containing v: with the tree hung from
/// v, each vertex contributes the product of (1 + count) over its children.
inline BigInt all_subgraphs(const FreeTree& tree, Vertex v) {
  RootedView rv = root_at(tree, v);
  std::vector<BigInt> count(tree.size(), BigInt(1));
  for (auto it = rv.order.rbegin(); it != rv.order.rend(); ++it)
    if (Vertex p = rv.parent[*it - 1]; p != 0) count[p - 1] *= count[*it - 1] + 1;
  return count[v - 1];
}

inline std::size_t sum_edge_distances(const SentenceStructure& s, Vertex v) {
  std::size_t sum = 0;
  const std::size_t pv = s.arrangement.position(v);
  for (Vertex u : s.tree.neighbours(v)) sum += detail::absdiff(s.arrangement.position(u), pv);
  return sum;
}

inline std::size_t coverage(const SentenceStructure& s, Vertex v) {
  detail::require_size(s.tree, MeasureId::Coverage);
  std::size_t lo = s.arrangement.position(v), hi = lo;
  for (Vertex u : s.tree.neighbours(v)) {
    lo = std::min(lo, s.arrangement.position(u));
    hi = std::max(hi, s.arrangement.position(u));
  }
  return hi - lo;
}

inline Rational corrected_sum_edge_distances(const SentenceStructure& s, Vertex v) {
  detail::require_size(s.tree, MeasureId::CorrectedSumEdgeDistances);
  return Rational(static_cast<long long>(coverage(s, v) * sum_edge_distances(s, v)),
                  static_cast<long long>(s.size() - 1));
}

inline Rational straightness(const SentenceStructure& s, Vertex v) {
  detail::require_size(s.tree, MeasureId::Straightness);
  return detail::distance_ratio_sum(s.arrangement, v, distances_from(s.tree, v)) /
         Rational(static_cast<long long>(s.size() - 1));
}

// --- whole-sentence scoring -----------------------------------------------------

/// Scores every vertex for one measure, sharing distance and subtree-size
/// computations across vertices.
class Scorer {
 public:
  explicit Scorer(const SentenceStructure& s) : s_(s) {}

  CentralityVector score(MeasureId m) {
    detail::require_size(s_.tree, m);
    const std::size_t n = s_.size();
    CentralityVector out{m, direction(m), {}};
    out.values.reserve(n);
    for (Vertex v = 1; v <= n; ++v) out.values.push_back(value(m, v));
    return out;
  }

 private:
  const std::vector<std::vector<std::size_t>>& dist() {
    if (!dist_) dist_ = distance_matrix(s_.tree);
    return *dist_;
  }
  const std::vector<std::vector<std::size_t>>& sizes() {
    if (!sizes_) sizes_ = all_subtree_sizes(s_.tree);
    return *sizes_;
  }

  Rational value(MeasureId m, Vertex v) {
    const std::size_t n = s_.size();
    const auto nm1 = static_cast<long long>(n - 1);
    switch (m) {
      case MeasureId::Degree: return static_cast<long long>(s_.tree.degree(v));
      case MeasureId::Eccentricity: {
        const auto& d = dist()[v - 1];
        return static_cast<long long>(*std::max_element(d.begin(), d.end()));
      }
      case MeasureId::MeanDistance:
        return Rational(static_cast<long long>(detail::distance_sum(dist()[v - 1])), nm1);
      case MeasureId::PopularCloseness:
        return Rational(1, static_cast<long long>(detail::distance_sum(dist()[v - 1])));
      case MeasureId::NewmanCloseness: return detail::reciprocal_distance_sum(dist()[v - 1]) / Rational(nm1);
      case MeasureId::Betweenness: return detail::betweenness_from_sizes(n, sizes()[v - 1]);
      case MeasureId::MaxSubtreeSize: return static_cast<long long>(sizes()[v - 1].back());
      case MeasureId::SecondMomentSubtrees: return detail::second_moment(sizes()[v - 1]);
      case MeasureId::AllSubgraphs: return Rational(all_subgraphs(s_.tree, v));
      case MeasureId::SumEdgeDistances: return static_cast<long long>(sum_edge_distances(s_, v));
      case MeasureId::Coverage: return static_cast<long long>(coverage(s_, v));
      case MeasureId::CorrectedSumEdgeDistances: return corrected_sum_edge_distances(s_, v);
      case MeasureId::Straightness:
        return detail::distance_ratio_sum(s_.arrangement, v, dist()[v - 1]) / Rational(nm1);
    }
    return {};
  }

  const SentenceStructure& s_;
  std::optional<std::vector<std::vector<std::size_t>>> dist_;
  std::optional<std::vector<std::vector<std::size_t>>> sizes_;
};

inline CentralityVector score(const SentenceStructure& s, MeasureId m) { return Scorer(s).score(m); }

/// One vector per requested measure, ordered by MeasureId.
inline std::vector<CentralityVector> score_all(const SentenceStructure& s, std::vector<MeasureId> measures) {
  std::sort(measures.begin(), measures.end());
  measures.erase(std::unique(measures.begin(), measures.end()), measures.end());
  Scorer scorer(s);
  std::vector<CentralityVector> out;
  out.reserve(measures.size());
  for (MeasureId m : measures) out.push_back(scorer.score(m));
  return out;
}

/// Scores that depend only on the free tree; the arrangement is irrelevant.
inline CentralityVector score_tree(const FreeTree& tree, MeasureId m) {
  SentenceStructure s(tree, LinearArrangement::identity(tree.size()), 1);
  return score(s, m);
}

/// Vertices attaining the optimum, ascending.
inline std::vector<Vertex> centers(const CentralityVector& vec) {
  if (vec.values.empty()) throw input_error("centers of an empty score vector");
  const Rational* best = &vec.values.front();
  for (const auto& x : vec.values)
    if (vec.better(x, *best)) best = &x;
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= vec.size(); ++v)
    if (vec.values[v - 1] == *best) out.push_back(v);
  return out;
}

}  // namespace rootness
