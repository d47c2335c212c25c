#include "ontoforge/serialize/writer.hpp"

#include <algorithm>
#include <vector>

#include "ontoforge/diagnostics.hpp"

namespace ontoforge::serialize {

using owl::Axiom;
using owl::ClassExpression;
using owl::EntityRef;

namespace {

bool pname_local_ok(std::string_view local) {
  if (local.empty() || local.front() == '-') return false;
  for (char c : local) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '"':
        out += "\\\"";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string render_iri(const std::string& iri, const PrefixTable& prefixes) {
  // Longest matching stem wins; fall back to the full form when the
  // local part would step outside the prefixed-name grammar.
  const std::string* best_name = nullptr;
  std::size_t best_len = 0;
  for (const auto& [name, stem] : prefixes) {
    if (stem.empty() || stem.size() < best_len) continue;
    if (iri.rfind(stem, 0) == 0 &&
        pname_local_ok(std::string_view(iri).substr(stem.size()))) {
      best_name = &name;
      best_len = stem.size();
    }
  }
  if (best_name != nullptr) {
    return *best_name + ":" + iri.substr(best_len);
  }
  return "<" + iri + ">";
}

std::string render_value(const owl::AnnotationValue& value) {
  if (value.is_boolean()) {
    return std::string("\"") + (value.as_boolean() ? "true" : "false") +
           "\"^^<" + owl::ns::kXsdBoolean + ">";
  }
  return quote(value.as_text());
}

}  // namespace

std::string render_entity(const EntityRef& entity,
                          const PrefixTable& prefixes) {
  return render_iri(entity.iri, prefixes);
}

std::string render_expression(const ClassExpression& expr,
                              const PrefixTable& prefixes) {
  switch (expr.kind()) {
    case ClassExpression::Kind::Named:
      return render_entity(expr.entity(), prefixes);
    case ClassExpression::Kind::Some:
      return "ObjectSomeValuesFrom(" +
             render_entity(expr.property(), prefixes) + " " +
             render_expression(expr.filler(), prefixes) + ")";
    case ClassExpression::Kind::Only:
      return "ObjectAllValuesFrom(" +
             render_entity(expr.property(), prefixes) + " " +
             render_expression(expr.filler(), prefixes) + ")";
    case ClassExpression::Kind::Union:
    case ClassExpression::Kind::Intersection: {
      std::string out = expr.kind() == ClassExpression::Kind::Union
                            ? "ObjectUnionOf("
                            : "ObjectIntersectionOf(";
      bool first = true;
      for (const auto& op : expr.operands()) {
        if (!first) out += ' ';
        out += render_expression(op, prefixes);
        first = false;
      }
      out += ')';
      return out;
    }
  }
  return {};
}

std::string render_axiom(const Axiom& axiom, const PrefixTable& prefixes) {
  switch (axiom.kind()) {
    case Axiom::Kind::Declaration: {
      const auto& d = axiom.declaration();
      const char* sort = d.sort == owl::EntitySort::Class ? "Class"
                         : d.sort == owl::EntitySort::ObjectProperty
                             ? "ObjectProperty"
                             : "AnnotationProperty";
      return std::string("Declaration(") + sort + "(" +
             render_entity(d.entity, prefixes) + "))";
    }
    case Axiom::Kind::SubClassOf: {
      const auto& s = axiom.subclass();
      return "SubClassOf(" + render_entity(s.sub, prefixes) + " " +
             render_expression(s.sup, prefixes) + ")";
    }
    case Axiom::Kind::AnnotationAssertion: {
      const auto& a = axiom.annotation();
      return "AnnotationAssertion(" +
             render_iri(owl::annotation_iri(a.property), prefixes) + " " +
             render_entity(a.subject, prefixes) + " " +
             render_value(a.value) + ")";
    }
  }
  return {};
}

std::string serialize_functional(const owl::Ontology& ontology) {
  const auto open = undeclared_references(ontology);
  if (!open.empty()) {
    std::string names;
    for (const auto& entity : open) {
      if (!names.empty()) names += ", ";
      names += "'" + entity.label + "'";
    }
    throw BuildError("cannot serialize: undeclared references: " + names);
  }

  const PrefixTable& prefixes = ontology.prefixes();
  std::string out;
  for (const auto& [name, stem] : prefixes) {
    out += "Prefix(" + name + ":=<" + stem + ">)\n";
  }
  out += "Ontology(<" + ontology.ontology_iri() + ">\n";

  std::vector<std::string> declarations;
  std::vector<std::string> subclasses;
  std::vector<std::string> annotations;
  for (const auto& axiom : ontology.axioms()) {
    switch (axiom.kind()) {
      case Axiom::Kind::Declaration:
        declarations.push_back(render_axiom(axiom, prefixes));
        break;
      case Axiom::Kind::SubClassOf:
        subclasses.push_back(render_axiom(axiom, prefixes));
        break;
      case Axiom::Kind::AnnotationAssertion:
        annotations.push_back(render_axiom(axiom, prefixes));
        break;
    }
  }
  std::sort(declarations.begin(), declarations.end());
  std::sort(subclasses.begin(), subclasses.end());
  std::sort(annotations.begin(), annotations.end());
  for (const auto& line : declarations) out += line + "\n";
  for (const auto& line : subclasses) out += line + "\n";
  for (const auto& line : annotations) out += line + "\n";
  out += ")\n";
  return out;
}

}  // namespace ontoforge::serialize
