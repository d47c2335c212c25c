#pragma once

#include <compare>
#include <string>

namespace ontoforge::owl {

// A named entity: the human-readable label plus the absolute IRI minted
// for it. Identity is the IRI alone; the label travels along for
// annotation values and reports, and two refs with the same IRI compare
// equal regardless of label.
struct EntityRef {
  std::string label;
  std::string iri;

  bool operator==(const EntityRef& other) const { return iri == other.iri; }
  std::strong_ordering operator<=>(const EntityRef& other) const {
    return iri <=> other.iri;
  }
};

// A scheme followed by a nonempty remainder, no whitespace or angle
// brackets anywhere. Enough to keep generated IRIs inside the
// functional-syntax grammar.
bool is_valid_absolute_iri(const std::string& iri);

}  // namespace ontoforge::owl
