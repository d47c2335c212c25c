#include "ontoforge/registry/deprecations.hpp"

#include <map>

#include "ontoforge/diagnostics.hpp"

namespace ontoforge::registry {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

DeprecationTable load_deprecations(std::string_view bytes) {
  DeprecationTable table;
  std::map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const auto eol = bytes.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? bytes.substr(pos)
                                : bytes.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? bytes.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("expected 'old_label<TAB>replacement_label'", line_no);
    }
    if (line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("expected exactly 2 tab-separated columns", line_no);
    }
    const std::string old_label{trim(line.substr(0, tab))};
    const std::string replacement{trim(line.substr(tab + 1))};
    if (old_label.empty()) {
      throw ParseError("empty deprecated label", line_no);
    }
    auto [it, fresh] = seen.emplace(old_label, line_no);
    if (!fresh) {
      throw ParseError("duplicate deprecation for '" + old_label +
                           "' (already seen at line " +
                           std::to_string(it->second) + ")",
                       line_no);
    }
    table[old_label] = replacement.empty()
                           ? std::nullopt
                           : std::optional<std::string>(replacement);
  }
  return table;
}

}  // namespace ontoforge::registry
