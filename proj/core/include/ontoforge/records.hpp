#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace ontoforge {

// Typed rows read from knowledge-source files. line is the 1-based
// position in the originating file, kept for diagnostics.

struct NameRecord {
  std::string name;
  std::size_t line = 0;
};

struct DiseaseRecord {
  std::string name;
  std::optional<std::string> omim;
  std::optional<std::string> long_name;
  std::size_t line = 0;
};

struct TermRecord {
  std::string paper_id;
  std::string term;
  std::size_t line = 0;
};

}  // namespace ontoforge
