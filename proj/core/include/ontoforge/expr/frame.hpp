#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontoforge/owl/axiom.hpp"
#include "ontoforge/owl/ontology.hpp"
#include "ontoforge/registry/environment.hpp"

namespace ontoforge::expr {

struct Annotation {
  owl::AnnotationId property = owl::AnnotationId::Label;
  owl::AnnotationValue value;

  bool operator==(const Annotation&) const = default;
};

// The description part of a class definition: superclass expressions,
// extra annotations, and an optional primary label. Order inside a frame
// does not matter; the axiom set is what counts.
struct Frame {
  std::vector<owl::ClassExpression> supers;
  std::vector<Annotation> annotations;
  std::optional<std::string> label;
};

// The axioms a frame contributes for the given class: its declaration,
// one SubClassOf per super, the label assertion, then the rest.
std::vector<owl::Axiom> frame_axioms(const owl::EntityRef& entity,
                                     const Frame& frame);

// Structural key for collision checks; equal frames produce equal keys
// independent of annotation order.
std::string frame_fingerprint(const Frame& frame);

// Declares `name` and attaches the frame's axioms to the ontology.
// Re-running with an identical frame changes nothing; a conflicting
// frame for an existing label is reported as a label collision through
// the environment and yields nullopt.
std::optional<owl::EntityRef> owl_class(const std::string& name,
                                        const Frame& frame,
                                        registry::Environment& env,
                                        owl::Ontology& ontology,
                                        const std::string& context = {});

}  // namespace ontoforge::expr
