#pragma once

#include <vector>

#include "ontoforge/owl/expression.hpp"

namespace ontoforge::expr {

// Broadcasting restriction constructors: a property plus a sequence of
// fillers yields one restriction per filler, in filler order. An empty
// filler sequence throws std::invalid_argument; broadcasting over
// nothing is always a caller bug.
std::vector<owl::ClassExpression> some(
    const owl::EntityRef& property,
    const std::vector<owl::ClassExpression>& fillers);
std::vector<owl::ClassExpression> only(
    const owl::EntityRef& property,
    const std::vector<owl::ClassExpression>& fillers);

// n-ary connectives; a single operand normalizes to the operand itself.
owl::ClassExpression union_of(std::vector<owl::ClassExpression> operands);
owl::ClassExpression intersection_of(
    std::vector<owl::ClassExpression> operands);

// The covering idiom: every existential from some() plus one universal
// restriction over the union of all fillers. Always yields exactly
// fillers.size() + 1 expressions.
std::vector<owl::ClassExpression> some_only(
    const owl::EntityRef& property,
    const std::vector<owl::ClassExpression>& fillers);

}  // namespace ontoforge::expr
