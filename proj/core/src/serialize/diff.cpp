#include "ontoforge/serialize/diff.hpp"

#include <algorithm>
#include <iterator>

namespace ontoforge::serialize {

DiffResult diff(const owl::Ontology& a, const owl::Ontology& b) {
  DiffResult result;
  std::set_difference(b.axioms().begin(), b.axioms().end(),
                      a.axioms().begin(), a.axioms().end(),
                      std::inserter(result.added, result.added.end()));
  std::set_difference(a.axioms().begin(), a.axioms().end(),
                      b.axioms().begin(), b.axioms().end(),
                      std::inserter(result.removed, result.removed.end()));
  return result;
}

}  // namespace ontoforge::serialize
