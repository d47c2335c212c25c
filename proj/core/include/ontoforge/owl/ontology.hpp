#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/owl/axiom.hpp"

namespace ontoforge::owl {

// Ontology container: the ontology IRI, a prefix table and a
// deduplicated axiom set kept in structural order. Equal contents built
// in any insertion order compare equal and serialize identically.
class Ontology {
 public:
  Ontology();
  // Installs the base prefix under the empty name plus owl: and rdfs:.
  Ontology(std::string ontology_iri, std::string base_prefix);
  Ontology(std::string ontology_iri,
           std::map<std::string, std::string> prefixes);

  const std::string& ontology_iri() const { return ontology_iri_; }
  const std::map<std::string, std::string>& prefixes() const {
    return prefixes_;
  }
  const std::set<Axiom>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }
  bool contains(const Axiom& axiom) const;
  // Returns false when the axiom was already present.
  bool insert(const Axiom& axiom);
  void insert(const std::vector<Axiom>& axioms);

  bool operator==(const Ontology& other) const = default;

 private:
  std::string ontology_iri_;
  std::map<std::string, std::string> prefixes_;
  std::set<Axiom> axioms_;
};

// Value-style extension: a copy of the ontology with the axioms merged in.
Ontology add_axioms(const Ontology& ontology, const std::vector<Axiom>& axioms);

// Every entity mentioned anywhere: declaration subjects, subclass sides,
// restriction properties, annotation subjects. Annotation properties are
// part of the fixed vocabulary and do not contribute.
std::set<EntityRef> signature(const Ontology& ontology);

// Entities used in some axiom but never declared.
std::set<EntityRef> undeclared_references(const Ontology& ontology);

}  // namespace ontoforge::owl
