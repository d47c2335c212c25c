#include "ontoforge/patterns/patterns.hpp"

#include <algorithm>
#include <utility>

#include "ontoforge/expr/frame.hpp"

namespace ontoforge::patterns {

using owl::ClassExpression;

const std::vector<std::string>& top_level_labels() {
  static const std::vector<std::string> labels = {
      kDisease, kGene,  kHumanAnatomy, kMitochondrialAnatomy,
      kProtein, kPaper, kTerm};
  return labels;
}

const std::vector<std::string>& scaffold_parent_labels() {
  static const std::vector<std::string> labels = {
      kDisease, kGene, kHumanAnatomy, kMitochondrialAnatomy, kProtein};
  return labels;
}

bool is_top_level(const std::string& label) {
  const auto& all = top_level_labels();
  return std::find(all.begin(), all.end(), label) != all.end();
}

void declare_top_level(ExpansionContext& ctx) {
  for (const auto& label : top_level_labels()) {
    auto ref =
        ctx.env.declare_class(label, "top-level:" + label, ctx.site);
    if (ref) {
      ctx.ontology.insert(owl::declare(*ref));
    }
  }
}

void named_subclass(const std::string& name, const std::string& parent_label,
                    ExpansionContext& ctx) {
  auto parent = ctx.env.resolve(parent_label, ctx.site);
  if (!parent) return;
  expr::Frame frame;
  frame.label = name;
  frame.supers.push_back(ClassExpression::named(*parent));
  expr::owl_class(name, frame, ctx.env, ctx.ontology, ctx.site);
}

void gene_class(const std::string& name, ExpansionContext& ctx) {
  named_subclass(name, kGene, ctx);
}

void disease_class(const DiseaseRecord& record, ExpansionContext& ctx) {
  auto parent = ctx.env.resolve(kDisease, ctx.site);
  if (!parent) return;
  expr::Frame frame;
  frame.label = record.name;
  frame.supers.push_back(ClassExpression::named(*parent));
  if (record.omim) {
    frame.annotations.push_back(
        {owl::AnnotationId::SeeAlso,
         owl::AnnotationValue::text("OMIMID:" + *record.omim)});
  }
  if (record.long_name) {
    // A second label, alongside the short-name one.
    frame.annotations.push_back(
        {owl::AnnotationId::Label,
         owl::AnnotationValue::text("Long name:" + *record.long_name)});
  }
  expr::owl_class(record.name, frame, ctx.env, ctx.ontology, ctx.site);
}

void paper_class(const std::string& paper_id, ExpansionContext& ctx) {
  named_subclass(paper_id, kPaper, ctx);
}

void term_class(const TermRecord& record, ExpansionContext& ctx) {
  auto term_root = ctx.env.resolve(kTerm, ctx.site);
  // The paper must already exist; a term never creates its source.
  auto paper = ctx.env.resolve(record.paper_id, ctx.site);
  if (!term_root || !paper) return;
  expr::Frame frame;
  frame.label = record.term;
  frame.supers.push_back(ClassExpression::named(*term_root));
  frame.annotations.push_back(
      {owl::AnnotationId::SeeAlso, owl::AnnotationValue::text(paper->label)});
  expr::owl_class(record.term, frame, ctx.env, ctx.ontology, ctx.site);
}

void PatternRegistry::add(std::string name, PatternFn fn) {
  patterns_[std::move(name)] = std::move(fn);
}

bool PatternRegistry::contains(const std::string& name) const {
  return patterns_.count(name) != 0;
}

const PatternFn* PatternRegistry::find(const std::string& name) const {
  auto it = patterns_.find(name);
  return it == patterns_.end() ? nullptr : &it->second;
}

std::vector<std::string> PatternRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(patterns_.size());
  for (const auto& [name, fn] : patterns_) out.push_back(name);
  return out;
}

namespace {

std::optional<std::string> require_binding(const Bindings& bindings,
                                           const char* key,
                                           const char* pattern,
                                           ExpansionContext& ctx) {
  auto it = bindings.find(key);
  if (it == bindings.end()) {
    ctx.env.diagnostics().error(std::string("pattern '") + pattern +
                                    "': missing required binding '" + key +
                                    "'",
                                ctx.site);
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::string> find_binding(const Bindings& bindings,
                                        const char* key) {
  auto it = bindings.find(key);
  if (it == bindings.end()) return std::nullopt;
  return it->second;
}

}  // namespace

const PatternRegistry& standard_patterns() {
  static const PatternRegistry registry = [] {
    PatternRegistry r;
    r.add("gene", [](const Bindings& b, ExpansionContext& ctx) {
      if (auto name = require_binding(b, "name", "gene", ctx)) {
        gene_class(*name, ctx);
      }
    });
    r.add("disease", [](const Bindings& b, ExpansionContext& ctx) {
      auto name = require_binding(b, "name", "disease", ctx);
      if (!name) return;
      DiseaseRecord record;
      record.name = *name;
      record.omim = find_binding(b, "omim");
      record.long_name = find_binding(b, "long_name");
      disease_class(record, ctx);
    });
    r.add("named-subclass", [](const Bindings& b, ExpansionContext& ctx) {
      auto name = require_binding(b, "name", "named-subclass", ctx);
      auto parent = require_binding(b, "parent", "named-subclass", ctx);
      if (name && parent) {
        named_subclass(*name, *parent, ctx);
      }
    });
    r.add("paper", [](const Bindings& b, ExpansionContext& ctx) {
      if (auto name = require_binding(b, "name", "paper", ctx)) {
        paper_class(*name, ctx);
      }
    });
    r.add("term", [](const Bindings& b, ExpansionContext& ctx) {
      auto paper_id = require_binding(b, "paper_id", "term", ctx);
      auto term = require_binding(b, "term", "term", ctx);
      if (paper_id && term) {
        term_class({*paper_id, *term, 0}, ctx);
      }
    });
    return r;
  }();
  return registry;
}

void instantiate(const PatternRegistry& registry,
                 const std::string& pattern_name, const Bindings& bindings,
                 ExpansionContext& ctx) {
  const PatternFn* fn = registry.find(pattern_name);
  if (fn == nullptr) {
    std::string known;
    for (const auto& name : registry.names()) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    ctx.env.diagnostics().error(
        "unknown pattern: " + pattern_name + " (registered: " + known + ")",
        ctx.site);
    return;
  }
  (*fn)(bindings, ctx);
}

ingest::ManifestVocabulary manifest_vocabulary(
    const PatternRegistry& registry) {
  ingest::ManifestVocabulary vocab;
  for (const auto& name : registry.names()) vocab.patterns.insert(name);
  for (const auto& label : top_level_labels()) vocab.parents.insert(label);
  vocab.fixed_parent = {{"gene", kGene},
                        {"disease", kDisease},
                        {"paper", kPaper},
                        {"term", kTerm}};
  vocab.formats_for = {{"gene", {"name-list"}},
                       {"named-subclass", {"name-list"}},
                       {"paper", {"name-list"}},
                       {"disease", {"disease-table"}},
                       {"term", {"paper-terms"}}};
  // Constraints only apply to patterns the registry actually has.
  std::erase_if(vocab.fixed_parent, [&](const auto& kv) {
    return vocab.patterns.count(kv.first) == 0;
  });
  std::erase_if(vocab.formats_for, [&](const auto& kv) {
    return vocab.patterns.count(kv.first) == 0;
  });
  return vocab;
}

}  // namespace ontoforge::patterns
