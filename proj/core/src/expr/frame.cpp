#include "ontoforge/expr/frame.hpp"

#include <algorithm>

namespace ontoforge::expr {

using owl::AnnotationAssertion;
using owl::Axiom;
using owl::ClassExpression;
using owl::EntityRef;

namespace {

void expression_key(const ClassExpression& expr, std::string& out) {
  switch (expr.kind()) {
    case ClassExpression::Kind::Named:
      out += "N(";
      out += expr.entity().iri;
      out += ')';
      break;
    case ClassExpression::Kind::Some:
    case ClassExpression::Kind::Only:
      out += expr.kind() == ClassExpression::Kind::Some ? "S(" : "O(";
      out += expr.property().iri;
      out += ',';
      expression_key(expr.filler(), out);
      out += ')';
      break;
    case ClassExpression::Kind::Union:
    case ClassExpression::Kind::Intersection:
      out += expr.kind() == ClassExpression::Kind::Union ? "U(" : "I(";
      for (const auto& op : expr.operands()) {
        expression_key(op, out);
        out += ',';
      }
      out += ')';
      break;
  }
}

std::string annotation_key(const Annotation& annotation) {
  std::string out = owl::annotation_local_name(annotation.property);
  out += '=';
  if (annotation.value.is_boolean()) {
    out += annotation.value.as_boolean() ? "#t" : "#f";
  } else {
    out += annotation.value.as_text();
  }
  return out;
}

}  // namespace

std::vector<Axiom> frame_axioms(const EntityRef& entity, const Frame& frame) {
  std::vector<Axiom> out;
  out.reserve(1 + frame.supers.size() + frame.annotations.size() + 1);
  out.push_back(owl::declare(entity));
  for (const auto& sup : frame.supers) {
    out.push_back(owl::subclass_of(entity, sup));
  }
  if (frame.label) {
    out.push_back(owl::annotate(entity, owl::AnnotationId::Label, *frame.label));
  }
  for (const auto& annotation : frame.annotations) {
    out.push_back(Axiom(
        AnnotationAssertion{entity, annotation.property, annotation.value}));
  }
  return out;
}

std::string frame_fingerprint(const Frame& frame) {
  // Sorted parts so frames differing only in list order collide with
  // themselves, not with genuinely different content.
  std::vector<std::string> super_keys;
  super_keys.reserve(frame.supers.size());
  for (const auto& sup : frame.supers) {
    std::string key;
    expression_key(sup, key);
    super_keys.push_back(std::move(key));
  }
  std::sort(super_keys.begin(), super_keys.end());

  std::vector<std::string> annotation_keys;
  annotation_keys.reserve(frame.annotations.size());
  for (const auto& annotation : frame.annotations) {
    annotation_keys.push_back(annotation_key(annotation));
  }
  std::sort(annotation_keys.begin(), annotation_keys.end());

  std::string out = "frame";
  for (const auto& key : super_keys) {
    out += '\x1f';
    out += "sup:";
    out += key;
  }
  for (const auto& key : annotation_keys) {
    out += '\x1f';
    out += "ann:";
    out += key;
  }
  if (frame.label) {
    out += '\x1f';
    out += "label:";
    out += *frame.label;
  }
  return out;
}

std::optional<EntityRef> owl_class(const std::string& name, const Frame& frame,
                                   registry::Environment& env,
                                   owl::Ontology& ontology,
                                   const std::string& context) {
  auto ref = env.declare_class(name, frame_fingerprint(frame), context);
  if (!ref) return std::nullopt;
  ontology.insert(frame_axioms(*ref, frame));
  return ref;
}

}  // namespace ontoforge::expr
