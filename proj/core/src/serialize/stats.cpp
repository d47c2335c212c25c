#include "ontoforge/serialize/stats.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace ontoforge::serialize {

using owl::Axiom;
using owl::ClassExpression;

namespace {

class GroupWalker {
 public:
  GroupWalker(const std::map<std::string, std::vector<std::string>>& supers,
              const std::map<std::string, std::string>& labels,
              const std::set<std::string>& top_level,
              const std::string& support)
      : supers_(supers),
        labels_(labels),
        top_level_(top_level),
        support_(support) {}

  // Group of the class with this IRI: the first top-level label found
  // walking named parents in lexicographic IRI order, else support.
  const std::string& group(const std::string& iri) {
    auto cached = memo_.find(iri);
    if (cached != memo_.end()) return cached->second;
    if (visiting_.count(iri) != 0) return support_;  // cycle

    auto label = labels_.find(iri);
    if (label != labels_.end() && top_level_.count(label->second) != 0) {
      return memo_.emplace(iri, label->second).first->second;
    }

    visiting_.insert(iri);
    const std::string* found = &support_;
    if (auto it = supers_.find(iri); it != supers_.end()) {
      for (const auto& sup : it->second) {
        const std::string& g = group(sup);
        if (g != support_) {
          found = &g;
          break;
        }
      }
    }
    visiting_.erase(iri);
    return memo_.emplace(iri, *found).first->second;
  }

 private:
  const std::map<std::string, std::vector<std::string>>& supers_;
  const std::map<std::string, std::string>& labels_;
  const std::set<std::string>& top_level_;
  const std::string& support_;
  std::map<std::string, std::string> memo_;
  std::set<std::string> visiting_;
};

}  // namespace

BuildReport stats(const owl::Ontology& ontology, std::size_t warning_count,
                  const StatsConfig& config) {
  BuildReport report;
  report.warning_count = warning_count;

  std::vector<std::string> class_iris;
  std::map<std::string, std::string> labels;          // iri -> label
  std::map<std::string, std::vector<std::string>> supers;  // iri -> super iris

  for (const auto& axiom : ontology.axioms()) {
    switch (axiom.kind()) {
      case Axiom::Kind::Declaration:
        ++report.declaration_axioms;
        if (axiom.declaration().sort == owl::EntitySort::Class) {
          ++report.class_declarations;
          class_iris.push_back(axiom.declaration().entity.iri);
          labels[axiom.declaration().entity.iri] =
              axiom.declaration().entity.label;
        }
        break;
      case Axiom::Kind::SubClassOf:
        ++report.subclass_axioms;
        if (axiom.subclass().sup.kind() == ClassExpression::Kind::Named) {
          supers[axiom.subclass().sub.iri].push_back(
              axiom.subclass().sup.entity().iri);
        }
        break;
      case Axiom::Kind::AnnotationAssertion:
        ++report.annotation_axioms;
        break;
    }
  }
  for (auto& [iri, list] : supers) std::sort(list.begin(), list.end());

  const std::set<std::string> top_level(config.top_level.begin(),
                                        config.top_level.end());
  for (const auto& label : config.top_level) {
    report.classes_by_group[label] = 0;
  }
  report.classes_by_group[config.support_group] = 0;

  GroupWalker walker(supers, labels, top_level, config.support_group);
  for (const auto& iri : class_iris) {
    ++report.classes_by_group[walker.group(iri)];
  }
  // The roots themselves are bookkeeping, not scaffold content.
  for (const auto& label : config.top_level) {
    auto node = report.classes_by_group.find(label);
    if (node != report.classes_by_group.end() && node->second > 0) {
      --node->second;
      ++report.classes_by_group[config.support_group];
    }
  }

  for (const auto& label : config.scaffold_parents) {
    auto it = report.classes_by_group.find(label);
    if (it != report.classes_by_group.end()) {
      report.scaffold_total += it->second;
    }
  }
  if (auto it = report.classes_by_group.find(config.term_parent);
      it != report.classes_by_group.end()) {
    report.term_total = it->second;
  }
  return report;
}

std::string format_report(const BuildReport& report, const StatsConfig& config,
                          const ingest::BuildManifest* manifest) {
  // Row order: scaffold parents as configured, remaining top level, the
  // support bucket, then anything unexpected.
  std::vector<std::string> order = config.scaffold_parents;
  for (const auto& label : config.top_level) {
    if (std::find(order.begin(), order.end(), label) == order.end()) {
      order.push_back(label);
    }
  }
  order.push_back(config.support_group);
  for (const auto& [group, count] : report.classes_by_group) {
    if (std::find(order.begin(), order.end(), group) == order.end()) {
      order.push_back(group);
    }
  }

  std::map<std::string, std::vector<std::string>> sources_by_parent;
  if (manifest != nullptr) {
    for (const auto& source : manifest->sources) {
      sources_by_parent[source.parent].push_back(source.locator.display());
    }
  }

  std::size_t name_width = std::string("Class type").size();
  for (const auto& group : order) name_width = std::max(name_width, group.size());

  std::ostringstream out;
  auto row = [&](const std::string& name, const std::string& count,
                 const std::string& source) {
    out << name << std::string(name_width - name.size() + 2, ' ');
    out << std::string(count.size() < 6 ? 6 - count.size() : 0, ' ') << count;
    if (!source.empty()) out << "  " << source;
    out << '\n';
  };

  row("Class type", "Count", "Data source");
  for (const auto& group : order) {
    std::size_t count = 0;
    if (auto it = report.classes_by_group.find(group);
        it != report.classes_by_group.end()) {
      count = it->second;
    }
    std::string source = "-";
    if (auto it = sources_by_parent.find(group);
        it != sources_by_parent.end()) {
      const auto& list = it->second;
      source = list.front();
      if (list.size() == 2) {
        source += ", " + list[1];
      } else if (list.size() > 2) {
        source += " (+" + std::to_string(list.size() - 1) + " more)";
      }
    }
    row(group, std::to_string(count), source);
  }

  out << '\n';
  out << "Scaffold classes:   " << report.scaffold_total << '\n';
  out << "Term-layer classes: " << report.term_total << '\n';
  out << "Axioms:             "
      << (report.declaration_axioms + report.subclass_axioms +
          report.annotation_axioms)
      << " (" << report.declaration_axioms << " declarations, "
      << report.subclass_axioms << " subclass, " << report.annotation_axioms
      << " annotations)" << '\n';
  out << "Warnings:           " << report.warning_count << '\n';
  return out.str();
}

}  // namespace ontoforge::serialize
