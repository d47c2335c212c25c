#pragma once

#include <compare>
#include <string>
#include <variant>

#include "ontoforge/owl/expression.hpp"

namespace ontoforge::owl {

enum class EntitySort { Class, ObjectProperty, AnnotationProperty };

// The fixed annotation vocabulary emitted by the scaffold.
enum class AnnotationId { Label, SeeAlso, Comment, Deprecated };

namespace ns {
inline constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* kXsdBoolean =
    "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace ns

std::string annotation_iri(AnnotationId id);
const char* annotation_local_name(AnnotationId id);

// String value for label/seeAlso/comment, boolean for owl:deprecated.
// Deliberately not a variant over bool: a bare string literal must never
// silently convert to a boolean annotation.
class AnnotationValue {
 public:
  AnnotationValue() = default;  // empty text
  static AnnotationValue text(std::string value);
  static AnnotationValue boolean(bool value);

  bool is_boolean() const { return kind_ == Kind::Boolean; }
  const std::string& as_text() const;
  bool as_boolean() const;

  bool operator==(const AnnotationValue&) const = default;
  auto operator<=>(const AnnotationValue&) const = default;

 private:
  enum class Kind { Text, Boolean };

  Kind kind_ = Kind::Text;
  std::string text_;
  bool flag_ = false;
};

struct Declaration {
  EntityRef entity;
  EntitySort sort = EntitySort::Class;

  bool operator==(const Declaration&) const = default;
  auto operator<=>(const Declaration&) const = default;
};

struct SubClassOfAxiom {
  EntityRef sub;
  ClassExpression sup;

  bool operator==(const SubClassOfAxiom&) const = default;
  auto operator<=>(const SubClassOfAxiom&) const = default;
};

struct AnnotationAssertion {
  EntityRef subject;
  AnnotationId property = AnnotationId::Label;
  AnnotationValue value;

  bool operator==(const AnnotationAssertion&) const = default;
  auto operator<=>(const AnnotationAssertion&) const = default;
};

// Tagged union over the three axiom shapes. The variant order doubles as
// the serializer's kind order. Construction enforces that owl:deprecated
// carries boolean true and every other annotation carries a string.
class Axiom {
 public:
  enum class Kind { Declaration = 0, SubClassOf = 1, AnnotationAssertion = 2 };

  Axiom(Declaration d);
  Axiom(SubClassOfAxiom s);
  Axiom(AnnotationAssertion a);

  Kind kind() const { return static_cast<Kind>(node_.index()); }
  const Declaration& declaration() const;
  const SubClassOfAxiom& subclass() const;
  const AnnotationAssertion& annotation() const;

  bool operator==(const Axiom&) const = default;
  auto operator<=>(const Axiom&) const = default;

 private:
  std::variant<Declaration, SubClassOfAxiom, AnnotationAssertion> node_;
};

Axiom declare(EntityRef entity, EntitySort sort = EntitySort::Class);
Axiom subclass_of(EntityRef sub, ClassExpression sup);
Axiom subclass_of(EntityRef sub, EntityRef sup);
Axiom annotate(EntityRef subject, AnnotationId property, std::string value);
Axiom mark_deprecated(EntityRef subject);

}  // namespace ontoforge::owl
