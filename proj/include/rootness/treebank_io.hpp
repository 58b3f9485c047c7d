#pragma once

// Reading and writing treebanks: head-vector files, CoNLL-U, punctuation
// removal and per-language collections.

#include "rootness/errors.hpp"
#include "rootness/tree.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rootness {

enum class BadInputPolicy { Abort, Skip };

struct ReadOptions {
  std::string source;  // file name used in diagnostics
  std::string language;
  Style style = Style::UD;
  std::size_t min_length = 3;
  BadInputPolicy policy = BadInputPolicy::Abort;
  bool strip_punct = false;  // CoNLL-U only
};

struct ReadStats {
  std::size_t read = 0;
  std::size_t kept = 0;
  std::size_t bad = 0;
  std::size_t too_short = 0;
  std::size_t punct_rejected = 0;
  std::vector<std::string> warnings;

  ReadStats& operator+=(const ReadStats& o) {
    read += o.read;
    kept += o.kept;
    bad += o.bad;
    too_short += o.too_short;
    punct_rejected += o.punct_rejected;
    warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
    return *this;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

/// Value of a "# key = value" comment, if the line is one.
inline std::optional<std::string> comment_value(std::string_view line, std::string_view key) {
  line = trim(line);
  if (line.empty() || line.front() != '#') return std::nullopt;
  line = trim(line.substr(1));
  if (line.substr(0, key.size()) != key) return std::nullopt;
  line = trim(line.substr(key.size()));
  if (line.empty() || line.front() != '=') return std::nullopt;
  return std::string(trim(line.substr(1)));
}

}  // namespace detail

/// Sentence from a head vector: heads[i] is the head of the token at position
/// i+1, 0 for the root. Vertices are positions, so the arrangement is the identity.
inline SentenceStructure from_head_vector(std::span<const std::size_t> heads, std::string language = {},
                                          Style style = Style::UD, std::string id = {}) {
  const std::size_t n = heads.size();
  if (n == 0) throw input_error("empty head vector");
  Vertex root = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (heads[i] > n)
      throw input_error("head " + std::to_string(heads[i]) + " of token " + std::to_string(i + 1) + " out of range");
    if (heads[i] == i + 1) throw input_error("token " + std::to_string(i + 1) + " is its own head");
    if (heads[i] == 0) {
      if (root != 0) throw input_error("multiple roots (tokens " + std::to_string(root) + " and " + std::to_string(i + 1) + ")");
      root = i + 1;
    }
  }
  if (root == 0) throw input_error("no root");
  // Every token must reach the root within n steps.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i + 1, steps = 0;
    while (heads[v - 1] != 0) {
      v = heads[v - 1];
      if (++steps > n) throw input_error("cycle through token " + std::to_string(i + 1));
    }
  }
  std::vector<Vertex> parent(heads.begin(), heads.end());
  return SentenceStructure(FreeTree::from_parents(parent), LinearArrangement::identity(n), root,
                           std::move(language), style, std::move(id));
}

/// Head vector in position order.
inline std::vector<std::size_t> to_head_vector(const SentenceStructure& s) {
  auto rv = root_at(s.tree, s.root);
  std::vector<std::size_t> heads(s.size());
  for (std::size_t p = 1; p <= s.size(); ++p) {
    Vertex v = s.arrangement.vertex_at(p);
    Vertex h = rv.parent[v - 1];
    heads[p - 1] = h == 0 ? 0 : s.arrangement.position(h);
  }
  return heads;
}

/// One sentence per line. Lines starting with '#' are comments; a
/// "# sent_id = X" comment names the next sentence, which otherwise gets its
/// 1-based ordinal among sentence lines.
inline std::vector<SentenceStructure> read_head_vectors(std::istream& in, const ReadOptions& opt,
                                                        ReadStats* stats = nullptr) {
  ReadStats local;
  ReadStats& st = stats ? *stats : local;
  std::vector<SentenceStructure> out;
  std::string line, pending_id;
  std::size_t line_no = 0, ordinal = 0;
  std::vector<std::size_t> heads;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (auto id = detail::comment_value(body, "sent_id")) pending_id = *id;
      continue;
    }
    ++ordinal;
    ++st.read;
    std::string id = pending_id.empty() ? std::to_string(ordinal) : pending_id;
    pending_id.clear();
    try {
      heads.clear();
      std::istringstream tokens{std::string(body)};
      std::string tok;
      while (tokens >> tok) {
        auto h = detail::parse_index(tok);
        if (!h) throw input_error("not a head index: '" + tok + "'");
        heads.push_back(*h);
      }
      SentenceStructure s = from_head_vector(heads, opt.language, opt.style, id);
      if (s.size() < opt.min_length) {
        ++st.too_short;
        continue;
      }
      out.push_back(std::move(s));
      ++st.kept;
    } catch (const input_error& e) {
      parse_error err(opt.source, line_no, e.what());
      if (opt.policy == BadInputPolicy::Abort) throw err;
      ++st.bad;
      st.warnings.emplace_back(err.what());
    }
  }
  return out;
}

inline void write_head_vectors(std::ostream& out, std::span<const SentenceStructure> sentences) {
  for (const auto& s : sentences) {
    if (!s.sentence_id.empty()) out << "# sent_id = " << s.sentence_id << '\n';
    auto heads = to_head_vector(s);
    for (std::size_t i = 0; i < heads.size(); ++i) out << (i ? " " : "") << heads[i];
    out << '\n';
  }
}

/// Removes PUNCT tokens. Each remaining token hangs from its nearest
/// non-PUNCT ancestor. A PUNCT root is replaced by its single non-PUNCT
/// dependent; with several the sentence is rejected. Returns nullopt with a
/// reason on rejection (including falling below min_length).
inline std::optional<SentenceStructure> strip_punctuation(const SentenceStructure& s, std::size_t min_length = 3,
                                                          std::string* reason = nullptr) {
  auto reject = [&](std::string why) -> std::optional<SentenceStructure> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  if (s.upos.size() != s.size()) throw input_error("sentence has no part-of-speech labels");
  auto is_punct = [&](Vertex v) { return s.upos[v - 1] == "PUNCT"; };
  auto rv = root_at(s.tree, s.root);

  // Surviving vertices in position order, renumbered densely.
  std::vector<Vertex> kept;
  for (std::size_t p = 1; p <= s.size(); ++p) {
    Vertex v = s.arrangement.vertex_at(p);
    if (!is_punct(v)) kept.push_back(v);
  }
  if (kept.empty()) return reject("only punctuation");
  std::vector<std::size_t> new_index(s.size() + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = i + 1;

  std::vector<std::size_t> heads(kept.size(), 0);
  std::vector<Vertex> orphans;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Vertex h = rv.parent[kept[i] - 1];
    while (h != 0 && is_punct(h)) h = rv.parent[h - 1];
    if (h == 0) orphans.push_back(i + 1);
    else heads[i] = new_index[h];
  }
  if (orphans.size() > 1) return reject("punctuation root with several dependents");
  // The new root takes no head; everything else was attached above.
  if (kept.size() < min_length) return reject("shorter than " + std::to_string(min_length) + " after removing punctuation");

  SentenceStructure out = from_head_vector(heads, s.language, s.style, s.sentence_id);
  for (Vertex v : kept) {
    if (!s.forms.empty()) out.forms.push_back(s.forms[v - 1]);
    out.upos.push_back(s.upos[v - 1]);
  }
  return out;
}

/// CoNLL-U reader. Only ID, FORM, UPOS and HEAD are used; multiword ranges
/// and empty nodes are skipped and the remaining tokens renumbered.
inline std::vector<SentenceStructure> read_conllu(std::istream& in, const ReadOptions& opt,
                                                  ReadStats* stats = nullptr) {
  ReadStats local;
  ReadStats& st = stats ? *stats : local;
  std::vector<SentenceStructure> out;

  struct Token {
    std::string id, form, upos, head;
  };
  std::vector<Token> tokens;
  std::string sent_id, error;
  std::size_t start_line = 0, error_line = 0, ordinal = 0;

  auto flush = [&] {
    if (tokens.empty() && error.empty()) return;
    ++ordinal;
    ++st.read;
    std::string id = sent_id.empty() ? std::to_string(ordinal) : sent_id;
    try {
      if (!error.empty()) throw parse_error(opt.source, error_line, "sentence " + id + ": " + error);
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < tokens.size(); ++i) index[tokens[i].id] = i + 1;
      std::vector<std::size_t> heads;
      for (const auto& t : tokens) {
        if (t.head == "0") {
          heads.push_back(0);
          continue;
        }
        auto it = index.find(t.head);
        if (!detail::parse_index(t.head) || it == index.end())
          throw parse_error(opt.source, start_line, "sentence " + id + ": bad HEAD '" + t.head + "'");
        heads.push_back(it->second);
      }
      SentenceStructure s = [&] {
        try {
          return from_head_vector(heads, opt.language, opt.style, id);
        } catch (const input_error& e) {
          throw parse_error(opt.source, start_line, "sentence " + id + ": " + e.what());
        }
      }();
      for (const auto& t : tokens) {
        s.forms.push_back(t.form);
        s.upos.push_back(t.upos);
      }
      if (opt.strip_punct) {
        std::string why;
        auto stripped = strip_punctuation(s, opt.min_length, &why);
        if (!stripped) {
          ++st.punct_rejected;
          st.warnings.push_back("sentence " + id + ": " + why);
        } else {
          out.push_back(std::move(*stripped));
          ++st.kept;
        }
      } else if (s.size() < opt.min_length) {
        ++st.too_short;
      } else {
        out.push_back(std::move(s));
        ++st.kept;
      }
    } catch (const parse_error& e) {
      if (opt.policy == BadInputPolicy::Abort) throw;
      ++st.bad;
      st.warnings.emplace_back(e.what());
    }
    tokens.clear();
    sent_id.clear();
    error.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) {
      flush();
      continue;
    }
    if (tokens.empty() && error.empty() && start_line < line_no) start_line = line_no;
    if (line.front() == '#') {
      if (auto id = detail::comment_value(line, "sent_id")) sent_id = *id;
      continue;
    }
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      auto tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() != 10) {
      if (error.empty()) {
        error = "expected 10 columns, found " + std::to_string(cols.size());
        error_line = line_no;
      }
      continue;
    }
    if (cols[0].find_first_of("-.") != std::string::npos) continue;
    tokens.push_back({cols[0], cols[1], cols[3], cols[6]});
  }
  flush();
  return out;
}

// --- collections -------------------------------------------------------------------

struct LanguageTreebank {
  std::string language;
  Style style = Style::UD;
  std::vector<SentenceStructure> sentences;
};

struct TreebankCollection {
  std::vector<LanguageTreebank> languages;

  std::size_t sentence_count() const {
    std::size_t total = 0;
    for (const auto& l : languages) total += l.sentences.size();
    return total;
  }

  /// Every language has the same number of sentences.
  bool is_parallel() const {
    for (const auto& l : languages)
      if (l.sentences.size() != languages.front().sentences.size()) return false;
    return true;
  }
};

inline std::optional<Style> parse_style(std::string_view s) {
  if (s == "ud" || s == "UD") return Style::UD;
  if (s == "sud" || s == "SUD") return Style::SUD;
  return std::nullopt;
}

enum class InputFormat { HeadVector, Conllu };

inline std::optional<InputFormat> parse_format(std::string_view s) {
  if (s == "hv") return InputFormat::HeadVector;
  if (s == "conllu") return InputFormat::Conllu;
  return std::nullopt;
}

inline std::vector<SentenceStructure> read_sentences(std::istream& in, InputFormat format, const ReadOptions& opt,
                                                     ReadStats* stats = nullptr) {
  return format == InputFormat::Conllu ? read_conllu(in, opt, stats) : read_head_vectors(in, opt, stats);
}

/// Loads `<root>/<style>/<language>.hv` (or `.conllu`), languages sorted by
/// name.
inline TreebankCollection load_collection(const std::filesystem::path& root, Style style, ReadOptions opt = {},
                                          ReadStats* stats = nullptr, InputFormat format = InputFormat::HeadVector) {
  namespace fs = std::filesystem;
  fs::path dir = root / to_string(style);
  if (!fs::is_directory(dir)) throw input_error("no collection directory " + dir.string());
  std::vector<fs::path> files;
  const std::string ext = format == InputFormat::Conllu ? ".conllu" : ".hv";
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ext) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw input_error("no " + ext + " files in " + dir.string());
  TreebankCollection c;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw input_error("cannot open " + f.string());
    opt.source = f.string();
    opt.language = f.stem().string();
    opt.style = style;
    ReadStats file_stats;
    LanguageTreebank lt{opt.language, style, read_sentences(in, format, opt, &file_stats)};
    if (stats) *stats += file_stats;
    c.languages.push_back(std::move(lt));
  }
  return c;
}

/// Keeps only sentence ids present in every language. Returns the number of
/// sentences dropped across all languages.
inline std::size_t reparallelize(TreebankCollection& c) {
  if (c.languages.empty()) return 0;
  std::set<std::string> common;
  for (const auto& s : c.languages.front().sentences) common.insert(s.sentence_id);
  for (const auto& l : c.languages) {
    std::set<std::string> ids;
    for (const auto& s : l.sentences)
      if (common.count(s.sentence_id)) ids.insert(s.sentence_id);
    common = std::move(ids);
  }
  std::size_t dropped = 0;
  for (auto& l : c.languages) {
    auto before = l.sentences.size();
    std::erase_if(l.sentences, [&](const SentenceStructure& s) { return !common.count(s.sentence_id); });
    dropped += before - l.sentences.size();
  }
  return dropped;
}

}  // namespace rootness
