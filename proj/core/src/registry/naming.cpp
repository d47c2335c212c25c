#include "ontoforge/registry/naming.hpp"

#include <cstdio>

namespace ontoforge::registry {

std::string sanitize_label(const std::string& label) {
  std::string out;
  out.reserve(label.size());
  for (unsigned char c : label) {
    if (c == ' ') {
      out += '_';
    } else if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '-') {
      out += static_cast<char>(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof(buf), "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

std::string iri_for(const std::string& label, IdRegistry* registry,
                    const std::string& base_prefix) {
  if (registry == nullptr) {
    return base_prefix + sanitize_label(label);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*llu", kIdLocalPrefix, kIdDigits,
                static_cast<unsigned long long>(registry->mint(label)));
  return base_prefix + buf;
}

NamingPolicy::NamingPolicy(std::string base_prefix, IdRegistry* registry)
    : base_prefix_(std::move(base_prefix)), registry_(registry) {}

owl::EntityRef NamingPolicy::entity(const std::string& label) {
  return {label, iri_for(label, registry_, base_prefix_)};
}

}  // namespace ontoforge::registry
