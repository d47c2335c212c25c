#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/ingest/source.hpp"

namespace ontoforge::ingest {

enum class SourceFormat { NameList, DiseaseTable, PaperTerms };

const char* format_name(SourceFormat format);
std::optional<SourceFormat> format_from_name(std::string_view name);

struct ManifestSource {
  SourceLocator locator;
  SourceFormat format = SourceFormat::NameList;
  std::string pattern;
  std::string parent;
};

struct BuildManifest {
  std::string ontology_iri;
  std::string base_prefix;
  std::vector<ManifestSource> sources;
  std::optional<SourceLocator> deprecations;
  std::optional<std::string> id_registry;  // path, relative to base_dir
  std::filesystem::path base_dir;          // directory of the manifest file
};

// What load_manifest validates source entries against: the registered
// pattern names, the legal parent labels, each pattern's required parent
// (absent meaning any legal parent) and its accepted formats (absent
// meaning any).
struct ManifestVocabulary {
  std::set<std::string> patterns;
  std::set<std::string> parents;
  std::map<std::string, std::string> fixed_parent;
  std::map<std::string, std::set<std::string>> formats_for;
};

// Strict manifest reader. The manifest dialect is JSON restricted to
// objects, arrays and strings; numbers, booleans and nulls anywhere are
// errors, as are unknown patterns, unknown parents, pattern/parent and
// pattern/format mismatches, and network locators without explicit
// live mode. Throws ParseError with position where one is known.
BuildManifest load_manifest(std::string_view bytes,
                            const ManifestVocabulary& vocab,
                            const std::filesystem::path& base_dir = {});

}  // namespace ontoforge::ingest
