#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootness {

/// Bad arguments: unknown vertex, malformed tree, empty input.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A score is not defined for the given tree (e.g. mean distance with n = 1).
class undefined_score_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Kendall tau on a variable whose values are all tied.
class undefined_correlation_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed treebank input. `line` is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(format(source, line, what)), source_(std::move(source)), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& what) {
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string source_;
  std::size_t line_;
};

}  // namespace rootness
