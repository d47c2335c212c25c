#pragma once

#include <string_view>

#include "ontoforge/owl/ontology.hpp"

namespace ontoforge::serialize {

// Strict parser for this tool's own canonical output, used to diff two
// emitted documents. Anything outside that subset is a ParseError with
// the offending line. Labels are recovered from IRI local names, so a
// round-tripped ontology keeps every IRI but not necessarily the
// original display labels; axiom identity is unaffected.
owl::Ontology parse_functional(std::string_view text);

}  // namespace ontoforge::serialize
