#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "ontoforge/owl/entity.hpp"

namespace ontoforge::owl {

// Class expression tree: named classes, existential/universal
// restrictions over an object property, and n-ary union/intersection.
// Values are immutable once built. Construction normalizes structure so
// equality is purely syntactic afterwards: a single-operand connective
// collapses to its operand, and nested connectives of the same kind are
// flattened one level.
class ClassExpression {
 public:
  enum class Kind { Named, Some, Only, Union, Intersection };

  static ClassExpression named(EntityRef entity);
  static ClassExpression some(EntityRef property, ClassExpression filler);
  static ClassExpression only(EntityRef property, ClassExpression filler);
  // Throws std::invalid_argument on an empty operand list.
  static ClassExpression union_of(std::vector<ClassExpression> operands);
  static ClassExpression intersection_of(std::vector<ClassExpression> operands);

  Kind kind() const { return kind_; }
  // Named only.
  const EntityRef& entity() const;
  // Some / Only only.
  const EntityRef& property() const;
  const ClassExpression& filler() const;
  // Union / Intersection only.
  const std::vector<ClassExpression>& operands() const;

  bool operator==(const ClassExpression& other) const;
  std::strong_ordering operator<=>(const ClassExpression& other) const;

 private:
  ClassExpression(Kind kind, EntityRef entity,
                  std::shared_ptr<const ClassExpression> filler,
                  std::vector<ClassExpression> operands);
  static ClassExpression nary(Kind kind, std::vector<ClassExpression> operands);

  Kind kind_ = Kind::Named;
  EntityRef entity_;  // the named class, or the property of a restriction
  std::shared_ptr<const ClassExpression> filler_;
  std::vector<ClassExpression> operands_;
};

}  // namespace ontoforge::owl
