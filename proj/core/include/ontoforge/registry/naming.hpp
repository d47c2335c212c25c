#pragma once

#include <string>

#include "ontoforge/owl/entity.hpp"
#include "ontoforge/registry/id_registry.hpp"

namespace ontoforge::registry {

// Local-part prefix and zero-pad width for registry-minted ids:
// MDO_0000001, MDO_0000002, ...
inline constexpr const char* kIdLocalPrefix = "MDO_";
inline constexpr int kIdDigits = 7;

// Label form usable as an IRI local part: spaces become underscores,
// anything else outside [A-Za-z0-9_-] is percent-encoded byte-wise
// (uppercase hex).
std::string sanitize_label(const std::string& label);

// IRI minting. Without a registry the IRI embeds the sanitized label;
// with one it embeds the zero-padded numeric id, minting on first use.
// Switching modes changes IRIs and nothing else about a build.
std::string iri_for(const std::string& label, IdRegistry* registry,
                    const std::string& base_prefix);

// Base prefix plus optional id registry, bundled for the environment.
class NamingPolicy {
 public:
  NamingPolicy() = default;
  explicit NamingPolicy(std::string base_prefix,
                        IdRegistry* registry = nullptr);

  owl::EntityRef entity(const std::string& label);
  const std::string& base_prefix() const { return base_prefix_; }
  bool minted() const { return registry_ != nullptr; }

 private:
  std::string base_prefix_;
  IdRegistry* registry_ = nullptr;
};

}  // namespace ontoforge::registry
