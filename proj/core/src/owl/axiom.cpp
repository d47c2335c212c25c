#include "ontoforge/owl/axiom.hpp"

#include <stdexcept>
#include <utility>

namespace ontoforge::owl {

std::string annotation_iri(AnnotationId id) {
  switch (id) {
    case AnnotationId::Label:
      return std::string(ns::kRdfs) + "label";
    case AnnotationId::SeeAlso:
      return std::string(ns::kRdfs) + "seeAlso";
    case AnnotationId::Comment:
      return std::string(ns::kRdfs) + "comment";
    case AnnotationId::Deprecated:
      return std::string(ns::kOwl) + "deprecated";
  }
  return {};
}

const char* annotation_local_name(AnnotationId id) {
  switch (id) {
    case AnnotationId::Label:
      return "label";
    case AnnotationId::SeeAlso:
      return "seeAlso";
    case AnnotationId::Comment:
      return "comment";
    case AnnotationId::Deprecated:
      return "deprecated";
  }
  return "";
}

AnnotationValue AnnotationValue::text(std::string value) {
  AnnotationValue v;
  v.kind_ = Kind::Text;
  v.text_ = std::move(value);
  return v;
}

AnnotationValue AnnotationValue::boolean(bool value) {
  AnnotationValue v;
  v.kind_ = Kind::Boolean;
  v.flag_ = value;
  return v;
}

const std::string& AnnotationValue::as_text() const {
  if (kind_ != Kind::Text) {
    throw std::logic_error("annotation value is not text");
  }
  return text_;
}

bool AnnotationValue::as_boolean() const {
  if (kind_ != Kind::Boolean) {
    throw std::logic_error("annotation value is not boolean");
  }
  return flag_;
}

Axiom::Axiom(Declaration d) : node_(std::move(d)) {}

Axiom::Axiom(SubClassOfAxiom s) : node_(std::move(s)) {}

Axiom::Axiom(AnnotationAssertion a) : node_(std::move(a)) {
  const auto& assertion = std::get<AnnotationAssertion>(node_);
  if (assertion.property == AnnotationId::Deprecated) {
    if (!assertion.value.is_boolean() || !assertion.value.as_boolean()) {
      throw std::invalid_argument(
          "owl:deprecated assertions must carry boolean true");
    }
  } else if (assertion.value.is_boolean()) {
    throw std::invalid_argument(
        "only owl:deprecated assertions may carry a boolean value");
  }
}

const Declaration& Axiom::declaration() const {
  return std::get<Declaration>(node_);
}

const SubClassOfAxiom& Axiom::subclass() const {
  return std::get<SubClassOfAxiom>(node_);
}

const AnnotationAssertion& Axiom::annotation() const {
  return std::get<AnnotationAssertion>(node_);
}

Axiom declare(EntityRef entity, EntitySort sort) {
  return Axiom(Declaration{std::move(entity), sort});
}

Axiom subclass_of(EntityRef sub, ClassExpression sup) {
  return Axiom(SubClassOfAxiom{std::move(sub), std::move(sup)});
}

Axiom subclass_of(EntityRef sub, EntityRef sup) {
  return Axiom(SubClassOfAxiom{std::move(sub),
                               ClassExpression::named(std::move(sup))});
}

Axiom annotate(EntityRef subject, AnnotationId property, std::string value) {
  return Axiom(AnnotationAssertion{std::move(subject), property,
                                   AnnotationValue::text(std::move(value))});
}

Axiom mark_deprecated(EntityRef subject) {
  return Axiom(AnnotationAssertion{std::move(subject),
                                   AnnotationId::Deprecated,
                                   AnnotationValue::boolean(true)});
}

}  // namespace ontoforge::owl
