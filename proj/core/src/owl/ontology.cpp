#include "ontoforge/owl/ontology.hpp"

#include <utility>

namespace ontoforge::owl {

namespace {

void collect_expression(const ClassExpression& expr,
                        std::set<EntityRef>& out) {
  switch (expr.kind()) {
    case ClassExpression::Kind::Named:
      out.insert(expr.entity());
      break;
    case ClassExpression::Kind::Some:
    case ClassExpression::Kind::Only:
      out.insert(expr.property());
      collect_expression(expr.filler(), out);
      break;
    case ClassExpression::Kind::Union:
    case ClassExpression::Kind::Intersection:
      for (const auto& op : expr.operands()) collect_expression(op, out);
      break;
  }
}

}  // namespace

Ontology::Ontology()
    : prefixes_{{"owl", ns::kOwl}, {"rdfs", ns::kRdfs}} {}

Ontology::Ontology(std::string ontology_iri, std::string base_prefix)
    : ontology_iri_(std::move(ontology_iri)),
      prefixes_{{"", std::move(base_prefix)},
                {"owl", ns::kOwl},
                {"rdfs", ns::kRdfs}} {}

Ontology::Ontology(std::string ontology_iri,
                   std::map<std::string, std::string> prefixes)
    : ontology_iri_(std::move(ontology_iri)), prefixes_(std::move(prefixes)) {}

bool Ontology::contains(const Axiom& axiom) const {
  return axioms_.count(axiom) != 0;
}

bool Ontology::insert(const Axiom& axiom) {
  return axioms_.insert(axiom).second;
}

void Ontology::insert(const std::vector<Axiom>& axioms) {
  for (const auto& axiom : axioms) axioms_.insert(axiom);
}

Ontology add_axioms(const Ontology& ontology,
                    const std::vector<Axiom>& axioms) {
  Ontology out = ontology;
  out.insert(axioms);
  return out;
}

std::set<EntityRef> signature(const Ontology& ontology) {
  std::set<EntityRef> out;
  for (const auto& axiom : ontology.axioms()) {
    switch (axiom.kind()) {
      case Axiom::Kind::Declaration:
        out.insert(axiom.declaration().entity);
        break;
      case Axiom::Kind::SubClassOf:
        out.insert(axiom.subclass().sub);
        collect_expression(axiom.subclass().sup, out);
        break;
      case Axiom::Kind::AnnotationAssertion:
        out.insert(axiom.annotation().subject);
        break;
    }
  }
  return out;
}

std::set<EntityRef> undeclared_references(const Ontology& ontology) {
  std::set<EntityRef> declared;
  for (const auto& axiom : ontology.axioms()) {
    if (axiom.kind() == Axiom::Kind::Declaration) {
      declared.insert(axiom.declaration().entity);
    }
  }
  std::set<EntityRef> out;
  for (const auto& entity : signature(ontology)) {
    if (declared.count(entity) == 0) out.insert(entity);
  }
  return out;
}

}  // namespace ontoforge::owl
