#pragma once

// Report tables shared by the command-line tool: rendering of exact values,
// best/second-best marks, cross-language summaries, and TSV/JSON I/O.
//
// A report is a list of named tables of rendered cells. TSV and JSON are two
// serializations of the same cells, so they always carry identical values.

#include "rootness/centrality.hpp"
#include "rootness/evaluation.hpp"
#include "rootness/strata.hpp"
#include "rootness/treebank_io.hpp"
#include "rootness/verify.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace rootness {

struct RenderOptions {
  int digits = 3;
  bool exact = false;  // "num/den" instead of decimals
};

/// Integers print as integers; other values as decimals (round half to even)
/// or as exact fractions.
inline std::string render(const Rational& q, const RenderOptions& opt = {}) {
  if (q.is_integer() || opt.exact) return q.str();
  return q.to_decimal(opt.digits);
}

inline std::string render(double x, const RenderOptions& opt = {}) { return format_decimal(x, opt.digits); }

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width differs from header in table " + name);
    rows.push_back(std::move(row));
  }

  std::size_t column(std::string_view c) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == c) return i;
    throw input_error("table " + name + " has no column '" + std::string(c) + "'");
  }
};

// --- serialization -------------------------------------------------------------------

/// Each table as "# name", a header line and tab-separated rows; tables are
/// separated by blank lines.
inline void write_tsv(std::ostream& out, std::span<const Table> tables) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << '\n';
    first = false;
    out << "# " << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
      out << '\n';
    }
  }
}

namespace detail {

/// Numbers become JSON numbers, empty cells null, everything else strings.
inline nlohmann::json cell_to_json(const std::string& s) {
  if (s.empty()) return nullptr;
  long long i = 0;
  auto [pi, ei] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (ei == std::errc{} && pi == s.data() + s.size()) return i;
  double d = 0;
  auto [pd, ed] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ed == std::errc{} && pd == s.data() + s.size() && std::isfinite(d)) return d;
  return s;
}

inline std::string cell_from_json(const nlohmann::json& v, int digits) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_decimal(v.get<double>(), digits);
  return v.dump();
}

}  // namespace detail

inline nlohmann::json to_json(std::span<const Table> tables) {
  nlohmann::json out = nlohmann::json::object();
  out["tables"] = nlohmann::json::array();
  for (const auto& t : tables) {
    nlohmann::json jt;
    jt["name"] = t.name;
    jt["columns"] = t.columns;
    jt["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
      nlohmann::json jr = nlohmann::json::object();
      for (std::size_t i = 0; i < r.size(); ++i) jr[t.columns[i]] = detail::cell_to_json(r[i]);
      jt["rows"].push_back(std::move(jr));
    }
    out["tables"].push_back(std::move(jt));
  }
  return out;
}

inline std::vector<Table> tables_from_json(const nlohmann::json& j, int digits = 3) {
  std::vector<Table> out;
  for (const auto& jt : j.at("tables")) {
    Table t{jt.at("name").get<std::string>(), jt.at("columns").get<std::vector<std::string>>(), {}};
    for (const auto& jr : jt.at("rows")) {
      std::vector<std::string> row;
      for (const auto& c : t.columns) row.push_back(jr.contains(c) ? detail::cell_from_json(jr.at(c), digits) : "");
      t.add(std::move(row));
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<Table> read_tsv(std::istream& in, const std::string& source = {}) {
  std::vector<Table> out;
  std::string line;
  bool want_header = false;
  std::size_t line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto tab = s.find('\t', start);
      cells.push_back(s.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      out.push_back(Table{line.substr(2), {}, {}});
      want_header = true;
    } else if (out.empty()) {
      throw parse_error(source, line_no, "table data before a '# name' line");
    } else if (want_header) {
      out.back().columns = split(line);
      want_header = false;
    } else {
      auto cells = split(line);
      if (cells.size() != out.back().columns.size())
        throw parse_error(source, line_no, "expected " + std::to_string(out.back().columns.size()) + " cells");
      out.back().rows.push_back(std::move(cells));
    }
  }
  return out;
}

/// Reads either serialization; JSON is recognised by a leading '{'.
inline std::vector<Table> read_tables(std::istream& in, const std::string& source = {}) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return tables_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(source, 0, std::string("malformed report JSON: ") + e.what());
    }
  }
  std::istringstream is(text);
  return read_tsv(is, source);
}

inline const Table& find_table(std::span<const Table> tables, std::string_view name) {
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw input_error("report has no table '" + std::string(name) + "'");
}

// --- marks ---------------------------------------------------------------------------

/// 1 for the best value, 2 for the next distinct value, 0 otherwise. Empty
/// entries are never marked; equal values share a mark.
inline std::vector<int> rank_marks(const std::vector<std::optional<Rational>>& values, bool higher_is_better) {
  std::vector<Rational> distinct;
  for (const auto& v : values)
    if (v) distinct.push_back(*v);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (higher_is_better) std::reverse(distinct.begin(), distinct.end());
  std::vector<int> marks(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    if (!distinct.empty() && *values[i] == distinct[0]) marks[i] = 1;
    else if (distinct.size() > 1 && *values[i] == distinct[1]) marks[i] = 2;
  }
  return marks;
}

// --- evaluation ------------------------------------------------------------------------

/// Per-measure quantities compared across measures, with their direction.
struct EvalMetric {
  std::string_view column;
  bool higher_is_better;
  Rational (*get)(const MeasureReport&);
};

inline const std::vector<EvalMetric>& eval_metrics() {
  static const std::vector<EvalMetric> m{
      {"precision", true, [](const MeasureReport& r) { return r.tally.precision(); }},
      {"recall", true, [](const MeasureReport& r) { return r.tally.recall(); }},
      {"F", true, [](const MeasureReport& r) { return r.tally.f_measure(); }},
      {"mean_rank", false, [](const MeasureReport& r) { return r.mean_rank; }},
      {"median_rank", false, [](const MeasureReport& r) { return r.median_rank; }},
      {"mean_dcg", true, [](const MeasureReport& r) { return Rational::from_double(r.mean_dcg); }},
      {"median_dcg", true, [](const MeasureReport& r) { return Rational::from_double(r.median_dcg); }},
  };
  return m;
}

struct GroupResult {
  EvalReport report;
  double baseline_dcg = 0;  // mean expected normalized DCG of a uniformly random rank
};

/// Mean over sentences of the expected normalized DCG under a random rank.
inline double expected_random_dcg(std::span<const SentenceStructure> sentences) {
  if (sentences.empty()) return 0;
  std::map<std::size_t, double> memo;
  double s = 0;
  for (const auto& x : sentences) {
    auto [it, fresh] = memo.try_emplace(x.size(), 0.0);
    if (fresh) it->second = random_rank_dcg_expectation(x.size());
    s += it->second;
  }
  return s / static_cast<double>(sentences.size());
}

inline std::string join_marks(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
  return s;
}

/// One row per (group, measure). `best` and `second` list the metrics on
/// which the row is first or second among the measures of its group.
inline Table evaluation_table(std::span<const GroupResult> groups, const RenderOptions& opt = {}) {
  Table t{"evaluation",
          {"group", "measure", "N_S", "N_M", "h", "baseline", "baseline_dcg", "precision", "recall", "F", "mean_rank",
           "median_rank", "mean_dcg", "median_dcg", "best", "second"},
          {}};
  for (const auto& g : groups) {
    const auto& ms = g.report.measures;
    std::vector<std::vector<std::string>> best(ms.size()), second(ms.size());
    for (const auto& metric : eval_metrics()) {
      std::vector<std::optional<Rational>> vals;
      for (const auto& m : ms) vals.emplace_back(metric.get(m));
      auto marks = rank_marks(vals, metric.higher_is_better);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (marks[i] == 1) best[i].emplace_back(metric.column);
        if (marks[i] == 2) second[i].emplace_back(metric.column);
      }
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& m = ms[i];
      t.add({g.report.group, std::string(name(m.measure)), std::to_string(m.tally.sentences),
             std::to_string(m.tally.guesses), std::to_string(m.tally.hits), render(g.report.baseline, opt),
             render(g.baseline_dcg, opt), render(m.tally.precision(), opt), render(m.tally.recall(), opt),
             render(m.tally.f_measure(), opt), render(m.mean_rank, opt), render(m.median_rank, opt),
             render(m.mean_dcg, opt), render(m.median_dcg, opt), join_marks(best[i]), join_marks(second[i])});
    }
  }
  return t;
}

/// Metrics summarised across languages; per-language rank and DCG enter
/// through their means.
struct SummaryMetric {
  std::string_view name;
  bool higher_is_better;
  double (*get)(const MeasureReport&);
};

inline const std::vector<SummaryMetric>& summary_metrics() {
  static const std::vector<SummaryMetric> m{
      {"precision", true, [](const MeasureReport& r) { return r.tally.precision().to_double(); }},
      {"recall", true, [](const MeasureReport& r) { return r.tally.recall().to_double(); }},
      {"F", true, [](const MeasureReport& r) { return r.tally.f_measure().to_double(); }},
      {"rank", false, [](const MeasureReport& r) { return r.mean_rank.to_double(); }},
      {"dcg", true, [](const MeasureReport& r) { return r.mean_dcg; }},
  };
  return m;
}

/// Index of the measure whose mean and median across languages both beat
/// every other measure strictly; empty when there is no such measure.
inline std::optional<std::size_t> clear_best(const std::vector<DistributionSummary>& s, bool higher_is_better) {
  auto beats = [&](double a, double b) { return higher_is_better ? a > b : a < b; };
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool wins = true;
    for (std::size_t j = 0; j < s.size() && wins; ++j)
      if (j != i) wins = beats(s[i].mean, s[j].mean) && beats(s[i].median, s[j].median);
    if (wins) return i;
  }
  return std::nullopt;
}

/// Tables "summary" (mean, median, sd, min, max over languages) and
/// "verdict" (the best measure per metric, or no clear single best).
inline std::vector<Table> summary_tables(std::span<const GroupResult> languages, const RenderOptions& opt = {}) {
  if (languages.empty()) throw input_error("no languages to summarise");
  const auto& first = languages.front().report.measures;
  Table summary{"summary", {"measure", "metric", "languages", "mean", "median", "sd", "min", "max"}, {}};
  Table verdict{"verdict", {"metric", "best", "mean", "median"}, {}};
  for (const auto& metric : summary_metrics()) {
    std::vector<DistributionSummary> per_measure;
    for (std::size_t i = 0; i < first.size(); ++i) {
      std::vector<double> xs;
      for (const auto& g : languages) xs.push_back(metric.get(g.report.measures.at(i)));
      auto s = summarize_distribution(xs);
      per_measure.push_back(s);
      summary.add({std::string(name(first[i].measure)), std::string(metric.name), std::to_string(xs.size()),
                   render(s.mean, opt), render(s.median, opt), render(s.sd, opt), render(s.min, opt),
                   render(s.max, opt)});
    }
    auto best = clear_best(per_measure, metric.higher_is_better);
    if (best)
      verdict.add({std::string(metric.name), std::string(name(first[*best].measure)), render(per_measure[*best].mean, opt),
                   render(per_measure[*best].median, opt)});
    else
      verdict.add({std::string(metric.name), "no clear single best", "", ""});
  }
  return {summary, verdict};
}

// --- scores ------------------------------------------------------------------------------

/// One row per (sentence, vertex). In decimal mode the all-subgraphs column
/// holds log2 of the count, which is astronomically large on long sentences.
inline Table score_table(std::span<const SentenceStructure> sentences, std::span<const MeasureId> measures,
                         const RenderOptions& opt = {}) {
  Table t{"scores", {"sentence", "vertex", "form", "root"}, {}};
  for (MeasureId m : measures)
    t.columns.emplace_back(m == MeasureId::AllSubgraphs && !opt.exact ? "log2(all-subgraphs)" : std::string(name(m)));
  t.columns.emplace_back("center_of");
  for (const auto& s : sentences) {
    Scorer scorer(s);
    std::vector<CentralityVector> vecs;
    std::vector<std::vector<Vertex>> cs;
    for (MeasureId m : measures) {
      if (s.size() < info(m).min_n) {
        vecs.push_back(CentralityVector{m, direction(m), {}});
        cs.emplace_back();
        continue;
      }
      vecs.push_back(scorer.score(m));
      cs.push_back(centers(vecs.back()));
    }
    for (Vertex v = 1; v <= s.size(); ++v) {
      std::vector<std::string> row{s.sentence_id, std::to_string(v), v <= s.forms.size() ? s.forms[v - 1] : "",
                                   v == s.root ? "1" : "0"};
      std::vector<std::string> center_of;
      for (std::size_t i = 0; i < measures.size(); ++i) {
        if (vecs[i].values.empty()) {
          row.emplace_back();
          continue;
        }
        const Rational& x = vecs[i].value(v);
        if (measures[i] == MeasureId::AllSubgraphs && !opt.exact)
          row.push_back(render(std::log2(x.to_double()), opt));
        else
          row.push_back(render(x, opt));
        if (std::binary_search(cs[i].begin(), cs[i].end(), v)) center_of.emplace_back(name(measures[i]));
      }
      row.push_back(join_marks(center_of));
      t.add(std::move(row));
    }
  }
  return t;
}

// --- baselines ---------------------------------------------------------------------------

/// Analytic baselines per language, with a seeded simulation when trials > 0.
inline Table baseline_table(const TreebankCollection& c, std::uint64_t seed, std::size_t trials,
                            const RenderOptions& opt = {}) {
  Table t{"baseline",
          {"language", "N_S", "precision", "rank", "dcg_random", "dcg_bound_mean", "seed", "trials", "mc_precision",
           "mc_precision_se", "mc_rank", "mc_rank_se", "mc_dcg", "mc_dcg_se"},
          {}};
  for (const auto& l : c.languages) {
    if (l.sentences.empty()) {
      t.add({l.language, "0", "", "", "", "", "", "", "", "", "", "", "", ""});
      continue;
    }
    std::vector<std::size_t> lengths;
    double bound = 0;
    for (const auto& s : l.sentences) {
      lengths.push_back(s.size());
      bound += baseline_dcg_bound(s.size());
    }
    bound /= static_cast<double>(lengths.size());
    std::vector<std::string> row{l.language,
                                 std::to_string(lengths.size()),
                                 render(baseline_classifier_expectation(lengths), opt),
                                 render(baseline_rank_expectation(), opt),
                                 render(expected_random_dcg(l.sentences), opt),
                                 render(bound, opt)};
    if (trials > 0) {
      auto mc = monte_carlo_baseline(lengths, seed, trials);
      for (auto x : {std::to_string(seed), std::to_string(trials)}) row.push_back(x);
      for (const Estimate& e : {mc.precision, mc.normalized_rank, mc.normalized_dcg}) {
        row.push_back(render(e.mean, opt));
        row.push_back(render(e.standard_error, opt));
      }
    } else {
      row.resize(t.columns.size());
    }
    t.add(std::move(row));
  }
  return t;
}

// --- short sentences ----------------------------------------------------------------------

inline Table strata_table(std::span<const StratumRow> rows, const RenderOptions& opt = {}) {
  Table t{"strata",
          {"n", "kind", "hubiness", "measure", "N_S", "N_M", "h", "baseline", "precision", "recall", "F", "best",
           "second"},
          {}};
  for (const auto& r : rows) {
    std::vector<std::vector<std::string>> best(r.measures.size()), second(r.measures.size());
    if (r.sentences > 0)
      for (Metric metric : {Metric::Precision, Metric::Recall, Metric::F}) {
        std::vector<std::optional<Rational>> vals;
        for (const auto& m : r.measures) vals.emplace_back(metric_value(m.tally, metric));
        auto marks = rank_marks(vals, true);
        for (std::size_t i = 0; i < marks.size(); ++i) {
          if (marks[i] == 1) best[i].emplace_back(metric_name(metric));
          if (marks[i] == 2) second[i].emplace_back(metric_name(metric));
        }
      }
    const std::string hub = r.kind.empty() ? "" : render(r.hubiness, opt);
    for (std::size_t i = 0; i < r.measures.size(); ++i) {
      const auto& m = r.measures[i];
      if (r.sentences == 0) {
        t.add({std::to_string(r.n), r.kind, hub, std::string(name(m.measure)), "0", "", "", "", "", "", "", "", ""});
        continue;
      }
      t.add({std::to_string(r.n), r.kind, hub, std::string(name(m.measure)), std::to_string(m.tally.sentences),
             std::to_string(m.tally.guesses), std::to_string(m.tally.hits), render(*r.baseline, opt),
             render(m.tally.precision(), opt), render(m.tally.recall(), opt), render(m.tally.f_measure(), opt),
             join_marks(best[i]), join_marks(second[i])});
    }
  }
  return t;
}

inline Table tau_table(std::string name_, std::span<const TauRow> rows, const RenderOptions& opt = {}) {
  Table t{std::move(name_), {"series", "measure", "metric", "points", "tau"}, {}};
  for (const auto& r : rows)
    t.add({r.series, std::string(name(r.measure)), std::string(metric_name(r.metric)), std::to_string(r.points),
           r.tau ? render(*r.tau, opt) : ""});
  return t;
}

// --- verification ---------------------------------------------------------------------------

inline Table claims_table(std::span<const ClaimResult> results) {
  Table t{"claims", {"claim", "status", "cases", "statement", "counterexamples"}, {}};
  for (const auto& r : results) {
    std::string w;
    for (const auto& x : r.witnesses) w += (w.empty() ? "" : " | ") + x;
    t.add({r.id, r.holds ? "pass" : "fail", std::to_string(r.cases), r.statement, w});
  }
  return t;
}

/// [{claim, status, counterexamples: [...]}, ...]
inline nlohmann::json claims_json(std::span<const ClaimResult> results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results)
    out.push_back({{"claim", r.id},
                   {"status", r.holds ? "pass" : "fail"},
                   {"statement", r.statement},
                   {"cases", r.cases},
                   {"counterexamples", r.witnesses}});
  return out;
}

// --- plot data -------------------------------------------------------------------------------

/// Metrics of the evaluation table that are plotted, with the baseline
/// column that serves as their reference line (empty: fixed at 1/2).
inline const std::vector<std::pair<std::string, std::string>>& plot_metrics() {
  static const std::vector<std::pair<std::string, std::string>> m{
      {"precision", "baseline"}, {"recall", "baseline"},       {"F", "baseline"},
      {"mean_rank", ""},         {"mean_dcg", "baseline_dcg"},
  };
  return m;
}

/// From an evaluation table (per language; a "pooled" group is ignored):
/// "boxplot" with one row per (measure, metric) and "points" with the
/// per-language values, or "violin" with binned densities on [0, 1].
inline std::vector<Table> plot_tables(const Table& eval, bool violin, std::size_t bins = 20,
                                      const RenderOptions& opt = {}) {
  const auto gi = eval.column("group"), mi = eval.column("measure");
  std::vector<std::string> measures;
  for (const auto& r : eval.rows)
    if (r[gi] != "pooled" && std::find(measures.begin(), measures.end(), r[mi]) == measures.end())
      measures.push_back(r[mi]);
  auto number = [](const std::string& s) {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      long long a = 0, b = 0;
      auto [pa, ea] = std::from_chars(s.data(), s.data() + slash, a);
      auto [pb, eb] = std::from_chars(s.data() + slash + 1, s.data() + s.size(), b);
      if (ea != std::errc{} || eb != std::errc{} || pa != s.data() + slash || pb != s.data() + s.size() || b == 0)
        throw input_error("not a number: '" + s + "'");
      return static_cast<double>(a) / static_cast<double>(b);
    }
    double d = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc{} || p != s.data() + s.size()) throw input_error("not a number: '" + s + "'");
    return d;
  };
  Table box{"boxplot",
            {"measure", "metric", "languages", "min", "whisker_lo", "q1", "median", "q3", "whisker_hi", "max", "mean",
             "outliers", "baseline"},
            {}};
  Table points{"points", {"measure", "metric", "language", "value"}, {}};
  Table density{"violin", {"measure", "metric", "bin_lo", "bin_hi", "density"}, {}};
  for (const auto& [metric, base_col] : plot_metrics()) {
    const auto ci = eval.column(metric);
    std::optional<std::size_t> bi;
    if (!base_col.empty()) bi = eval.column(base_col);
    for (const auto& m : measures) {
      std::vector<double> xs, base;
      for (const auto& r : eval.rows) {
        if (r[gi] == "pooled" || r[mi] != m || r[ci].empty()) continue;
        xs.push_back(number(r[ci]));
        base.push_back(bi ? number(r[*bi]) : 0.5);
        points.add({m, metric, r[gi], r[ci]});
      }
      if (xs.empty()) continue;
      const double ref = std::accumulate(base.begin(), base.end(), 0.0) / static_cast<double>(base.size());
      if (!violin) {
        auto b = boxplot_stats(xs);
        auto s = summarize_distribution(xs);
        std::string out;
        for (double o : b.outliers) out += (out.empty() ? "" : ",") + render(o, opt);
        box.add({m, metric, std::to_string(xs.size()), render(s.min, opt), render(b.whisker_lo, opt),
                 render(b.q1, opt), render(b.median, opt), render(b.q3, opt), render(b.whisker_hi, opt),
                 render(s.max, opt), render(s.mean, opt), out, render(ref, opt)});
        continue;
      }
      std::vector<std::size_t> counts(bins, 0);
      for (double x : xs) {
        auto k = static_cast<std::size_t>(std::clamp(x, 0.0, 1.0) * static_cast<double>(bins));
        ++counts[std::min(k, bins - 1)];
      }
      for (std::size_t k = 0; k < bins; ++k) {
        const double lo = static_cast<double>(k) / static_cast<double>(bins);
        const double hi = static_cast<double>(k + 1) / static_cast<double>(bins);
        const double d = static_cast<double>(counts[k]) / static_cast<double>(xs.size()) * static_cast<double>(bins);
        density.add({m, metric, render(lo, opt), render(hi, opt), render(d, opt)});
      }
    }
  }
  if (violin) return {density};
  return {box, points};
}

}  // namespace rootness
