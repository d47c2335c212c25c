#pragma once

#include <set>

#include "ontoforge/owl/ontology.hpp"

namespace ontoforge::serialize {

// Axiom-set difference between two ontologies.
struct DiffResult {
  std::set<owl::Axiom> added;    // in b, not in a
  std::set<owl::Axiom> removed;  // in a, not in b

  bool empty() const { return added.empty() && removed.empty(); }
};

DiffResult diff(const owl::Ontology& a, const owl::Ontology& b);

}  // namespace ontoforge::serialize
