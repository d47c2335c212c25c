#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontoforge/diagnostics.hpp"
#include "ontoforge/owl/entity.hpp"
#include "ontoforge/registry/deprecations.hpp"
#include "ontoforge/registry/naming.hpp"

namespace ontoforge::registry {

struct Warning {
  enum class Kind { DeprecatedReference, Other };

  Kind kind = Kind::Other;
  std::string label;
  std::string context;
};

// Declare-before-use symbol table. declare_class hands out the stable
// EntityRef for a label and detects conflicting redefinitions via the
// caller-supplied content fingerprint. resolve of an undeclared label is
// an error; resolve of a deprecated one succeeds with a warning and
// follows the configured replacement when there is one.
class Environment {
 public:
  Environment(NamingPolicy naming, Diagnostics& diags);

  // nullopt means the declaration failed and an error was recorded.
  // A repeat declaration with an identical fingerprint is a no-op that
  // returns the existing ref. from_deprecation marks a placeholder
  // declaration synthesized for a retired label; a later real
  // declaration of the same label may take it over.
  std::optional<owl::EntityRef> declare_class(const std::string& label,
                                              const std::string& fingerprint,
                                              const std::string& context = {},
                                              bool from_deprecation = false);

  // nullopt means the lookup failed and an error was recorded.
  std::optional<owl::EntityRef> resolve(const std::string& label,
                                        const std::string& context = {});

  bool is_declared(const std::string& label) const;
  std::optional<owl::EntityRef> find(const std::string& label) const;
  std::size_t declared_count() const { return declared_.size(); }

  void install_deprecations(DeprecationTable table);
  const DeprecationTable& deprecations() const { return deprecations_; }
  bool is_deprecated(const std::string& label) const;

  const std::vector<Warning>& warnings() const { return warnings_; }
  Diagnostics& diagnostics() { return *diags_; }
  NamingPolicy& naming() { return naming_; }

 private:
  struct Entry {
    owl::EntityRef ref;
    std::string fingerprint;
    bool from_deprecation = false;
  };

  NamingPolicy naming_;
  Diagnostics* diags_;
  std::map<std::string, Entry> declared_;
  std::map<std::string, std::string> iri_owner_;  // iri -> label
  DeprecationTable deprecations_;
  std::vector<Warning> warnings_;
};

}  // namespace ontoforge::registry
