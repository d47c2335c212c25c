#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ontoforge/ingest/manifest.hpp"
#include "ontoforge/owl/ontology.hpp"
#include "ontoforge/records.hpp"
#include "ontoforge/registry/environment.hpp"

namespace ontoforge::patterns {

// The fixed top level every generated class hangs from.
inline constexpr const char* kDisease = "Disease";
inline constexpr const char* kGene = "Gene";
inline constexpr const char* kHumanAnatomy = "HumanAnatomy";
inline constexpr const char* kMitochondrialAnatomy = "MitochondrialAnatomy";
inline constexpr const char* kProtein = "Protein";
inline constexpr const char* kPaper = "Paper";
inline constexpr const char* kTerm = "Term";

// All seven roots, in declaration (and therefore id-minting) order.
const std::vector<std::string>& top_level_labels();
// The five roots whose subtrees make up the curated scaffold; Paper and
// Term carry the literature layer instead.
const std::vector<std::string>& scaffold_parent_labels();
bool is_top_level(const std::string& label);

// Everything a pattern touches while expanding one record. site is the
// record's source coordinate ("file:line") for diagnostics.
struct ExpansionContext {
  owl::Ontology& ontology;
  registry::Environment& env;
  std::string site;
};

// Declares the seven roots (declaration axioms only). Idempotent.
void declare_top_level(ExpansionContext& ctx);

// One call per input record. Each declares the record's class and
// attaches its axioms; problems are recorded through the environment's
// diagnostics and the record is skipped.
void gene_class(const std::string& name, ExpansionContext& ctx);
void disease_class(const DiseaseRecord& record, ExpansionContext& ctx);
void named_subclass(const std::string& name, const std::string& parent_label,
                    ExpansionContext& ctx);
void paper_class(const std::string& paper_id, ExpansionContext& ctx);
void term_class(const TermRecord& record, ExpansionContext& ctx);

using Bindings = std::map<std::string, std::string>;
using PatternFn = std::function<void(const Bindings&, ExpansionContext&)>;

// Name -> expansion function. The standard registry carries the five
// patterns above; tests register variants to probe how schema tweaks
// ripple through a build.
class PatternRegistry {
 public:
  void add(std::string name, PatternFn fn);
  bool contains(const std::string& name) const;
  const PatternFn* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, PatternFn> patterns_;
};

const PatternRegistry& standard_patterns();

// Manifest-facing dispatch. Unknown pattern names and missing bindings
// are diagnostics, not exceptions.
void instantiate(const PatternRegistry& registry,
                 const std::string& pattern_name, const Bindings& bindings,
                 ExpansionContext& ctx);

// Validation vocabulary for load_manifest, derived from a registry.
ingest::ManifestVocabulary manifest_vocabulary(
    const PatternRegistry& registry = standard_patterns());

}  // namespace ontoforge::patterns
