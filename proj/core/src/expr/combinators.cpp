#include "ontoforge/expr/combinators.hpp"

#include <stdexcept>
#include <utility>

namespace ontoforge::expr {

using owl::ClassExpression;
using owl::EntityRef;

namespace {

std::vector<ClassExpression> broadcast(
    ClassExpression (*make)(EntityRef, ClassExpression),
    const EntityRef& property, const std::vector<ClassExpression>& fillers) {
  if (fillers.empty()) {
    throw std::invalid_argument("broadcast over empty filler list");
  }
  std::vector<ClassExpression> out;
  out.reserve(fillers.size());
  for (const auto& filler : fillers) {
    out.push_back(make(property, filler));
  }
  return out;
}

}  // namespace

std::vector<ClassExpression> some(const EntityRef& property,
                                  const std::vector<ClassExpression>& fillers) {
  return broadcast(&ClassExpression::some, property, fillers);
}

std::vector<ClassExpression> only(const EntityRef& property,
                                  const std::vector<ClassExpression>& fillers) {
  return broadcast(&ClassExpression::only, property, fillers);
}

ClassExpression union_of(std::vector<ClassExpression> operands) {
  return ClassExpression::union_of(std::move(operands));
}

ClassExpression intersection_of(std::vector<ClassExpression> operands) {
  return ClassExpression::intersection_of(std::move(operands));
}

std::vector<ClassExpression> some_only(
    const EntityRef& property, const std::vector<ClassExpression>& fillers) {
  auto out = some(property, fillers);
  out.push_back(
      ClassExpression::only(property, union_of(fillers)));
  return out;
}

}  // namespace ontoforge::expr
