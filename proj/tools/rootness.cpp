// rootness: score dependency trees, evaluate how well each centrality score
// finds the root, and check the theory behind the scores.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 verification failure.

#include "rootness/report.hpp"
#include "rootness/treebank_io.hpp"
#include "rootness/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace rootness;

namespace {

constexpr int kUsage = 1, kDataError = 2, kVerifyFailed = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out = "tsv";
  bool exact = false;
  int digits = 3;
};

struct DataFlags {
  std::string format = "hv";
  std::string style = "ud";
  std::size_t min_length = 3;
  bool skip_bad = false;
  bool strip_punct = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app->add_flag("--exact", c.exact, "Print exact fractions instead of decimals");
  app->add_option("--digits", c.digits, "Fractional digits of decimals")->check(CLI::Range(0, 30));
}

void add_data(CLI::App* app, DataFlags& d, bool style) {
  app->add_option("--format", d.format, "Input format")->check(CLI::IsMember({"hv", "conllu"}));
  if (style) app->add_option("--style", d.style, "Annotation style")->check(CLI::IsMember({"ud", "sud"}));
  app->add_option("--min-length", d.min_length, "Drop sentences with fewer vertices");
  app->add_flag("--skip-bad", d.skip_bad, "Skip malformed sentences instead of failing");
  app->add_flag("--strip-punct", d.strip_punct, "Remove punctuation tokens (CoNLL-U)");
  app->add_option("--jobs", d.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

std::vector<MeasureId> parse_measures(const std::string& list, std::vector<MeasureId> fallback) {
  if (list.empty()) return fallback;
  if (list == "all") return all_measures();
  if (list == "default-ensemble") return default_ensemble();
  std::vector<MeasureId> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = parse_measure(item);
    if (!m) throw usage_error("unknown measure '" + item + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw usage_error("no measures selected");
  return out;
}

ReadOptions read_options(const DataFlags& d) {
  ReadOptions opt;
  opt.min_length = d.min_length;
  opt.policy = d.skip_bad ? BadInputPolicy::Skip : BadInputPolicy::Abort;
  opt.strip_punct = d.strip_punct;
  opt.style = *parse_style(d.style);
  return opt;
}

void report_stats(const ReadStats& s) {
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  if (s.bad || s.too_short || s.punct_rejected)
    std::cerr << "read " << s.read << " sentences, kept " << s.kept << " (" << s.bad << " malformed, " << s.too_short
              << " too short, " << s.punct_rejected << " rejected by punctuation removal)\n";
}

TreebankCollection load(const std::string& root, const DataFlags& d, const std::string& languages) {
  ReadStats stats;
  auto c = load_collection(root, *parse_style(d.style), read_options(d), &stats, *parse_format(d.format));
  report_stats(stats);
  if (languages.empty()) return c;
  std::vector<std::string> wanted, missing;
  std::stringstream ss(languages);
  std::string item;
  while (std::getline(ss, item, ',')) wanted.push_back(item);
  for (const auto& w : wanted)
    if (std::none_of(c.languages.begin(), c.languages.end(), [&](const auto& l) { return l.language == w; }))
      missing.push_back(w);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw input_error("missing language files: " + list);
  }
  std::erase_if(c.languages, [&](const auto& l) { return std::find(wanted.begin(), wanted.end(), l.language) == wanted.end(); });
  return c;
}

std::vector<SentenceStructure> pooled(const TreebankCollection& c) {
  std::vector<SentenceStructure> all;
  for (const auto& l : c.languages) all.insert(all.end(), l.sentences.begin(), l.sentences.end());
  return all;
}

void emit(const Common& c, const std::vector<Table>& tables) {
  if (c.out == "json") std::cout << to_json(tables).dump(2) << '\n';
  else write_tsv(std::cout, tables);
}

RenderOptions render_options(const Common& c) { return RenderOptions{c.digits, c.exact}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centrality scores as root finders on dependency trees"};
  app.require_subcommand(1);

  Common common;
  DataFlags data;
  std::string measure_list, languages;

  auto* score_cmd = app.add_subcommand("score", "Per-vertex scores of every sentence");
  std::vector<std::string> score_inputs;
  score_cmd->add_option("inputs", score_inputs, "Head-vector or CoNLL-U files")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--measures", measure_list, "Comma list, 'all' or 'default-ensemble' (default all)");
  add_common(score_cmd, common);
  add_data(score_cmd, data, false);

  auto* eval_cmd = app.add_subcommand("evaluate", "Root identification per language or pooled");
  std::string collection, grouping = "language";
  bool summary = false;
  eval_cmd->add_option("collection", collection, "Directory holding <style>/<language>.<ext>")->required();
  eval_cmd->add_option("grouping", grouping, "language or pooled")->check(CLI::IsMember({"language", "pooled"}));
  eval_cmd->add_option("--measures", measure_list, "Comma list, 'all' or 'default-ensemble' (default)");
  eval_cmd->add_option("--languages", languages, "Comma list of languages to keep");
  eval_cmd->add_flag("--summary", summary, "Add summaries across languages");
  add_common(eval_cmd, common);
  add_data(eval_cmd, data, true);

  auto* short_cmd = app.add_subcommand("short", "Short sentences pooled across languages");
  std::size_t n_min = 3, n_max = 6;
  bool by_kind = false, tau = false;
  short_cmd->add_option("collection", collection, "Directory holding <style>/<language>.<ext>")->required();
  short_cmd->add_option("--n-min", n_min, "Smallest length")->check(CLI::Range(3, 6));
  short_cmd->add_option("--n-max", n_max, "Largest length")->check(CLI::Range(3, 6));
  short_cmd->add_flag("--by-kind", by_kind, "Stratify by length and unlabelled tree");
  short_cmd->add_flag("--tau", tau, "Add Kendall tau against length and hubiness");
  add_common(short_cmd, common);
  add_data(short_cmd, data, true);

  auto* base_cmd = app.add_subcommand("baseline", "Random-guess baselines per language");
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  base_cmd->add_option("collection", collection, "Directory holding <style>/<language>.<ext>")->required();
  base_cmd->add_option("--seed", seed, "Simulation seed");
  base_cmd->add_option("--trials", trials, "Simulation trials (0: analytic only)");
  base_cmd->add_option("--languages", languages, "Comma list of languages to keep");
  add_common(base_cmd, common);
  add_data(base_cmd, data, true);

  auto* verify_cmd = app.add_subcommand("verify", "Check the theoretical properties of the scores");
  std::vector<std::string> claims;
  VerifyLimits lim;
  bool list_claims = false;
  verify_cmd->add_option("claims", claims, "Claim ids or prefixes (default all)");
  verify_cmd->add_flag("--list", list_claims, "List claim ids and exit");
  verify_cmd->add_option("--family-n", lim.family_n, "Largest tree of the parametric families")->check(CLI::Range(5, 5000));
  verify_cmd->add_option("--exhaustive-n", lim.exhaustive_n, "Largest size for all-tree checks")
      ->check(CLI::Range(3, static_cast<int>(kMaxEnumeratedTreeSize)));
  verify_cmd->add_option("--random-trees", lim.random_trees, "Random trees per claim");
  verify_cmd->add_option("--random-n", lim.random_n, "Largest random tree")->check(CLI::Range(3, 2000));
  verify_cmd->add_option("--arrangement-pairs", lim.arrangement_pairs, "Random (tree, arrangement) pairs");
  verify_cmd->add_option("--seed", lim.seed, "Seed of the random trees");
  verify_cmd->add_option("--out", common.out, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  auto* plot_cmd = app.add_subcommand("plotdata", "Boxplot or violin data from evaluate output");
  std::string eval_file, kind = "boxplot";
  std::size_t bins = 20;
  plot_cmd->add_option("evaluation", eval_file, "Output of 'evaluate' (TSV or JSON)")->required()->check(CLI::ExistingFile);
  plot_cmd->add_option("--kind", kind, "boxplot or violin-bins")->check(CLI::IsMember({"boxplot", "violin-bins"}));
  plot_cmd->add_option("--bins", bins, "Bins on [0, 1]")->check(CLI::Range(1, 1000));
  add_common(plot_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const RenderOptions ro = render_options(common);
    if (score_cmd->parsed()) {
      auto ms = parse_measures(measure_list, all_measures());
      ReadStats stats;
      std::vector<SentenceStructure> sentences;
      for (const auto& path : score_inputs) {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open " + path);
        ReadOptions opt = read_options(data);
        opt.source = path;
        auto got = read_sentences(in, *parse_format(data.format), opt, &stats);
        sentences.insert(sentences.end(), std::make_move_iterator(got.begin()), std::make_move_iterator(got.end()));
      }
      report_stats(stats);
      emit(common, {score_table(sentences, ms, ro)});
    } else if (eval_cmd->parsed()) {
      auto ms = parse_measures(measure_list, default_ensemble());
      auto c = load(collection, data, languages);
      std::vector<GroupResult> groups;
      if (grouping == "pooled") {
        auto all = pooled(c);
        if (all.empty()) throw input_error("collection has no sentences");
        groups.push_back({evaluate("pooled", all, ms, data.jobs), expected_random_dcg(all)});
      } else {
        for (const auto& l : c.languages) {
          if (l.sentences.empty()) throw input_error("language " + l.language + " has no sentences");
          groups.push_back({evaluate(l.language, l.sentences, ms, data.jobs), expected_random_dcg(l.sentences)});
        }
      }
      std::vector<Table> tables{evaluation_table(groups, ro)};
      if (summary) {
        if (grouping == "pooled") throw usage_error("--summary needs the language grouping");
        for (auto& t : summary_tables(groups, ro)) tables.push_back(std::move(t));
      }
      emit(common, tables);
    } else if (short_cmd->parsed()) {
      if (n_min > n_max) throw usage_error("--n-min exceeds --n-max");
      auto all = pooled(load(collection, data, ""));
      std::vector<Table> tables{strata_table(short_sentence_table(all, n_min, n_max, by_kind, data.jobs), ro)};
      if (tau) {
        tables.push_back(tau_table("tau_size", tau_versus_size(all, n_min, n_max, data.jobs), ro));
        tables.push_back(tau_table("tau_hubiness", tau_versus_hubiness(all, n_min, n_max, data.jobs), ro));
      }
      emit(common, tables);
    } else if (base_cmd->parsed()) {
      auto c = load(collection, data, languages);
      emit(common, {baseline_table(c, seed, trials, ro)});
    } else if (verify_cmd->parsed()) {
      if (list_claims) {
        for (const auto& id : claim_ids()) std::cout << id << '\n';
        return 0;
      }
      auto ids = select_claims(claims);
      if (ids.empty()) throw usage_error("no claim matches the filter");
      std::vector<ClaimResult> results;
      for (const auto& id : ids) results.push_back(run_claim(id, lim));
      if (common.out == "json") std::cout << claims_json(results).dump(2) << '\n';
      else write_tsv(std::cout, std::vector<Table>{claims_table(results)});
      bool ok = true;
      for (const auto& r : results) {
        if (r.holds) continue;
        ok = false;
        std::cerr << "claim " << r.id << " failed: " << r.statement << '\n';
        for (const auto& w : r.witnesses) std::cerr << "  " << w << '\n';
      }
      return ok ? 0 : kVerifyFailed;
    } else if (plot_cmd->parsed()) {
      std::ifstream in(eval_file);
      if (!in) throw input_error("cannot open " + eval_file);
      auto tables = read_tables(in, eval_file);
      emit(common, plot_tables(find_table(tables, "evaluation"), kind == "violin-bins", bins, ro));
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
