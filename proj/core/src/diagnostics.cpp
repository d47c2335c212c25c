#include "ontoforge/diagnostics.hpp"

namespace ontoforge {

std::string Diagnostic::to_string() const {
  std::string out;
  if (!context.empty()) {
    out += context;
    out += ": ";
  }
  out += severity == Severity::Error ? "error: " : "warning: ";
  out += message;
  return out;
}

void Diagnostics::error(std::string message, std::string context) {
  entries_.push_back(
      {Severity::Error, std::move(message), std::move(context)});
  ++error_count_;
}

void Diagnostics::warning(std::string message, std::string context) {
  entries_.push_back(
      {Severity::Warning, std::move(message), std::move(context)});
  ++warning_count_;
}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(message), line_(line), column_(column) {}

}  // namespace ontoforge
