#include "ontoforge/registry/environment.hpp"

#include <utility>

namespace ontoforge::registry {

namespace {

std::string trim_copy(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && (s[begin] == ' ' || s[begin] == '\t')) ++begin;
  while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
  return s.substr(begin, end - begin);
}

}  // namespace

Environment::Environment(NamingPolicy naming, Diagnostics& diags)
    : naming_(std::move(naming)), diags_(&diags) {}

std::optional<owl::EntityRef> Environment::declare_class(
    const std::string& raw_label, const std::string& fingerprint,
    const std::string& context, bool from_deprecation) {
  const std::string label = trim_copy(raw_label);
  if (label.empty()) {
    diags_->error("cannot declare a class with an empty label", context);
    return std::nullopt;
  }

  auto it = declared_.find(label);
  if (it != declared_.end()) {
    if (it->second.fingerprint == fingerprint) {
      return it->second.ref;
    }
    // A placeholder synthesized for a retired label yields to the first
    // real declaration; the deprecation annotation already emitted for
    // it stays valid because the ref is unchanged.
    if (it->second.from_deprecation && !from_deprecation) {
      it->second.fingerprint = fingerprint;
      it->second.from_deprecation = false;
      return it->second.ref;
    }
    diags_->error("label collision: '" + label +
                      "' is already defined with different content",
                  context);
    return std::nullopt;
  }

  owl::EntityRef ref = naming_.entity(label);
  auto owner = iri_owner_.find(ref.iri);
  if (owner != iri_owner_.end()) {
    diags_->error("label collision: '" + label + "' and '" + owner->second +
                      "' map to the same IRI <" + ref.iri + ">",
                  context);
    return std::nullopt;
  }
  iri_owner_.emplace(ref.iri, label);
  declared_.emplace(label, Entry{ref, fingerprint, from_deprecation});
  return ref;
}

std::optional<owl::EntityRef> Environment::resolve(const std::string& label,
                                                   const std::string& context) {
  const bool deprecated = is_deprecated(label);
  auto it = declared_.find(label);

  if (!deprecated) {
    if (it == declared_.end()) {
      diags_->error("undeclared label: '" + label + "'", context);
      return std::nullopt;
    }
    return it->second.ref;
  }

  warnings_.push_back(
      {Warning::Kind::DeprecatedReference, label, context});
  diags_->warning("reference to deprecated label '" + label + "'", context);

  const auto& replacement = deprecations_.at(label);
  if (replacement) {
    auto rep = declared_.find(*replacement);
    if (rep == declared_.end()) {
      diags_->error("replacement '" + *replacement + "' for deprecated '" +
                        label + "' is not declared",
                    context);
      return std::nullopt;
    }
    return rep->second.ref;
  }
  if (it == declared_.end()) {
    diags_->error("undeclared label: '" + label + "'", context);
    return std::nullopt;
  }
  return it->second.ref;
}

bool Environment::is_declared(const std::string& label) const {
  return declared_.count(label) != 0;
}

std::optional<owl::EntityRef> Environment::find(
    const std::string& label) const {
  auto it = declared_.find(label);
  if (it == declared_.end()) return std::nullopt;
  return it->second.ref;
}

void Environment::install_deprecations(DeprecationTable table) {
  deprecations_ = std::move(table);
}

bool Environment::is_deprecated(const std::string& label) const {
  return deprecations_.count(label) != 0;
}

}  // namespace ontoforge::registry
