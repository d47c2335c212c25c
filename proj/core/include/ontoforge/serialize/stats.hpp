#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ontoforge/ingest/manifest.hpp"
#include "ontoforge/owl/ontology.hpp"

namespace ontoforge::serialize {

struct StatsConfig {
  std::vector<std::string> top_level;
  std::vector<std::string> scaffold_parents;
  std::string term_parent = "Term";
  std::string support_group = "support";
};

// Class counts grouped by asserted top-level ancestor. Grouping walks
// named superclass edges only (no inference); a class that reaches more
// than one root through different parents is counted under the first
// found walking parents in lexicographic order, and a class reaching no
// root counts as support.
struct BuildReport {
  std::map<std::string, std::size_t> classes_by_group;
  std::size_t scaffold_total = 0;
  std::size_t term_total = 0;
  std::size_t class_declarations = 0;
  std::size_t declaration_axioms = 0;
  std::size_t subclass_axioms = 0;
  std::size_t annotation_axioms = 0;
  std::size_t warning_count = 0;
};

BuildReport stats(const owl::Ontology& ontology, std::size_t warning_count,
                  const StatsConfig& config);

// Aligned per-group table plus totals. The data-source column is filled
// from the manifest when one is given.
std::string format_report(const BuildReport& report, const StatsConfig& config,
                          const ingest::BuildManifest* manifest = nullptr);

}  // namespace ontoforge::serialize
