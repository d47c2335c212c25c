#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontoforge {

enum class Severity { Error, Warning };

// One build diagnostic. context carries the use site when one is known:
// "file:line", a source locator, or a pattern name.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  std::string context;

  std::string to_string() const;
};

// Ordered diagnostic collector for one pipeline run. The pipeline keeps
// going after recoverable errors so a single run reports everything;
// callers must test has_errors() before writing any output.
class Diagnostics {
 public:
  void error(std::string message, std::string context = {});
  void warning(std::string message, std::string context = {});

  bool has_errors() const { return error_count_ > 0; }
  std::size_t error_count() const { return error_count_; }
  std::size_t warning_count() const { return warning_count_; }
  const std::vector<Diagnostic>& entries() const { return entries_; }

 private:
  std::vector<Diagnostic> entries_;
  std::size_t error_count_ = 0;
  std::size_t warning_count_ = 0;
};

// Fatal failure outside the per-record diagnostic flow: I/O, lock
// contention, registry regression, serializing an incomplete ontology.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or content error in an input stream. line and column are
// 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ontoforge
