#include "ontoforge/owl/expression.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ontoforge::owl {

ClassExpression::ClassExpression(Kind kind, EntityRef entity,
                                 std::shared_ptr<const ClassExpression> filler,
                                 std::vector<ClassExpression> operands)
    : kind_(kind),
      entity_(std::move(entity)),
      filler_(std::move(filler)),
      operands_(std::move(operands)) {}

ClassExpression ClassExpression::named(EntityRef entity) {
  return {Kind::Named, std::move(entity), nullptr, {}};
}

ClassExpression ClassExpression::some(EntityRef property,
                                      ClassExpression filler) {
  return {Kind::Some, std::move(property),
          std::make_shared<const ClassExpression>(std::move(filler)),
          {}};
}

ClassExpression ClassExpression::only(EntityRef property,
                                      ClassExpression filler) {
  return {Kind::Only, std::move(property),
          std::make_shared<const ClassExpression>(std::move(filler)),
          {}};
}

ClassExpression ClassExpression::nary(Kind kind,
                                      std::vector<ClassExpression> operands) {
  if (operands.empty()) {
    throw std::invalid_argument(
        kind == Kind::Union ? "empty operand list for union"
                            : "empty operand list for intersection");
  }
  // Operands of the same connective were flattened when they were built,
  // so splicing one level here keeps the whole tree flat.
  std::vector<ClassExpression> flat;
  flat.reserve(operands.size());
  for (auto& op : operands) {
    if (op.kind() == kind) {
      for (const auto& inner : op.operands()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  return {kind, EntityRef{}, nullptr, std::move(flat)};
}

ClassExpression ClassExpression::union_of(
    std::vector<ClassExpression> operands) {
  return nary(Kind::Union, std::move(operands));
}

ClassExpression ClassExpression::intersection_of(
    std::vector<ClassExpression> operands) {
  return nary(Kind::Intersection, std::move(operands));
}

const EntityRef& ClassExpression::entity() const { return entity_; }

const EntityRef& ClassExpression::property() const { return entity_; }

const ClassExpression& ClassExpression::filler() const { return *filler_; }

const std::vector<ClassExpression>& ClassExpression::operands() const {
  return operands_;
}

bool ClassExpression::operator==(const ClassExpression& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering ClassExpression::operator<=>(
    const ClassExpression& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  switch (kind_) {
    case Kind::Named:
      return entity_ <=> other.entity_;
    case Kind::Some:
    case Kind::Only: {
      if (auto c = entity_ <=> other.entity_; c != 0) return c;
      return *filler_ <=> *other.filler_;
    }
    case Kind::Union:
    case Kind::Intersection:
      return std::lexicographical_compare_three_way(
          operands_.begin(), operands_.end(), other.operands_.begin(),
          other.operands_.end());
  }
  return std::strong_ordering::equal;  // unreachable
}

}  // namespace ontoforge::owl
