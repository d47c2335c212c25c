#pragma once

#include <map>
#include <string>

#include "ontoforge/owl/ontology.hpp"

namespace ontoforge::serialize {

using PrefixTable = std::map<std::string, std::string>;  // name -> IRI stem

std::string render_entity(const owl::EntityRef& entity,
                          const PrefixTable& prefixes);
std::string render_expression(const owl::ClassExpression& expr,
                              const PrefixTable& prefixes);
std::string render_axiom(const owl::Axiom& axiom, const PrefixTable& prefixes);

// Canonical functional-syntax document: prefix lines sorted by name, the
// ontology header, one axiom per line ordered by kind (declarations,
// subclass axioms, annotations) then by rendered bytes, LF line ends, no
// trailing whitespace. Structurally equal ontologies serialize to
// byte-identical documents. Throws BuildError while the ontology still
// has undeclared references; partial output is never produced.
std::string serialize_functional(const owl::Ontology& ontology);

}  // namespace ontoforge::serialize
