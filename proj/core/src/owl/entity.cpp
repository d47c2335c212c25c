#include "ontoforge/owl/entity.hpp"

#include <cctype>

namespace ontoforge::owl {

bool is_valid_absolute_iri(const std::string& iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return false;
  }
  std::size_t colon = std::string::npos;
  for (std::size_t i = 0; i < iri.size(); ++i) {
    const char c = iri[i];
    if (c == ':') {
      if (colon == std::string::npos) colon = i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' ||
        c == '>' || c == '"') {
      return false;
    }
    if (colon == std::string::npos) {
      // Still inside the scheme.
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' &&
          c != '-' && c != '.') {
        return false;
      }
    }
  }
  return colon != std::string::npos && colon + 1 < iri.size();
}

}  // namespace ontoforge::owl
