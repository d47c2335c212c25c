#include "ontoforge/ingest/manifest.hpp"

#include <json.hpp>

#include <algorithm>

#include "ontoforge/diagnostics.hpp"
#include "ontoforge/owl/entity.hpp"

namespace ontoforge::ingest {

using nlohmann::json;

const char* format_name(SourceFormat format) {
  switch (format) {
    case SourceFormat::NameList:
      return "name-list";
    case SourceFormat::DiseaseTable:
      return "disease-table";
    case SourceFormat::PaperTerms:
      return "paper-terms";
  }
  return "";
}

std::optional<SourceFormat> format_from_name(std::string_view name) {
  if (name == "name-list") return SourceFormat::NameList;
  if (name == "disease-table") return SourceFormat::DiseaseTable;
  if (name == "paper-terms") return SourceFormat::PaperTerms;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

std::string join_sorted(const std::set<std::string>& names) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

// The manifest dialect carries no numbers, booleans or nulls anywhere;
// rejecting them up front catches hand-edits like unquoted OMIM ids.
void reject_non_string_scalars(const json& value, const std::string& where) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      reject_non_string_scalars(child, where.empty() ? key : where + "." + key);
    }
  } else if (value.is_array()) {
    std::size_t index = 0;
    for (const auto& child : value) {
      reject_non_string_scalars(
          child, where + "[" + std::to_string(index++) + "]");
    }
  } else if (!value.is_string()) {
    fail(where, "manifest values must be objects, arrays or strings");
  }
}

std::string require_string(const json& object, const std::string& key,
                           const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    fail(where, "missing required key '" + key + "'");
  }
  return it->get<std::string>();
}

FetchMode parse_mode(const std::string& text, const std::string& where) {
  if (text == "release") return FetchMode::Release;
  if (text == "live") return FetchMode::Live;
  fail(where, "mode must be \"release\" or \"live\", not \"" + text + "\"");
}

// A locator is either a plain string or an object with locator/mode/
// inline keys. The scheme comes from the locator string itself.
SourceLocator parse_locator(const json& value, const std::string& where) {
  const json* object = nullptr;
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_object()) {
    object = &value;
    text = require_string(value, "locator", where);
  } else {
    fail(where, "expected a locator string or object");
  }

  SourceLocator locator;
  if (text.rfind("http://", 0) == 0) {
    locator.scheme = Scheme::Http;
    locator.target = text;
  } else if (text.rfind("https://", 0) == 0) {
    locator.scheme = Scheme::Https;
    locator.target = text;
  } else if (text == "inline") {
    locator.scheme = Scheme::Inline;
  } else {
    locator.scheme = Scheme::File;
    locator.target =
        text.rfind("file:", 0) == 0 ? text.substr(5) : text;
    if (locator.target.empty()) {
      fail(where, "empty file locator");
    }
  }

  bool explicit_mode = false;
  if (object != nullptr) {
    if (auto it = object->find("mode"); it != object->end()) {
      locator.mode = parse_mode(it->get<std::string>(), where);
      explicit_mode = true;
    }
    if (auto it = object->find("inline"); it != object->end()) {
      if (locator.scheme != Scheme::Inline) {
        fail(where, "'inline' names are only valid with the inline locator");
      }
      if (!it->is_array()) {
        fail(where, "'inline' must be an array of names");
      }
      for (const auto& name : *it) {
        locator.inline_names.push_back(name.get<std::string>());
      }
    }
  }

  if (locator.scheme == Scheme::Inline && object == nullptr) {
    fail(where, "inline locator requires an object with an 'inline' array");
  }
  if (locator.scheme == Scheme::Inline && locator.inline_names.empty() &&
      (object == nullptr || object->find("inline") == object->end())) {
    fail(where, "inline locator requires an 'inline' array");
  }

  const bool network =
      locator.scheme == Scheme::Http || locator.scheme == Scheme::Https;
  if (network) {
    // A URL silently defaulting to release would mask a reproducibility
    // hole; live intent has to be spelled out.
    if (!explicit_mode || locator.mode != FetchMode::Live) {
      fail(where, "http(s) sources require explicit \"mode\": \"live\"");
    }
  } else if (explicit_mode && locator.mode == FetchMode::Live) {
    fail(where, "\"live\" mode requires an http(s) locator");
  }
  return locator;
}

}  // namespace

BuildManifest load_manifest(std::string_view bytes,
                            const ManifestVocabulary& vocab,
                            const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    // Recompute a position from the byte offset; the library's message
    // embeds one in a format of its own.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte, bytes.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (bytes[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("manifest is not valid JSON", line, column);
  }

  if (!root.is_object()) {
    throw ParseError("manifest root must be a JSON object");
  }
  reject_non_string_scalars(root, "");

  BuildManifest manifest;
  manifest.base_dir = base_dir;
  manifest.ontology_iri = require_string(root, "ontology_iri", "");
  manifest.base_prefix = require_string(root, "base_prefix", "");
  if (!owl::is_valid_absolute_iri(manifest.ontology_iri)) {
    throw ParseError("ontology_iri is not a valid absolute IRI: '" +
                     manifest.ontology_iri + "'");
  }
  if (!owl::is_valid_absolute_iri(manifest.base_prefix)) {
    throw ParseError("base_prefix is not a valid absolute IRI: '" +
                     manifest.base_prefix + "'");
  }

  auto sources_it = root.find("sources");
  if (sources_it == root.end() || !sources_it->is_array()) {
    throw ParseError("missing required key 'sources' (array)");
  }

  std::size_t index = 0;
  for (const auto& entry : *sources_it) {
    const std::string where = "sources[" + std::to_string(index++) + "]";
    if (!entry.is_object()) {
      fail(where, "each source must be an object");
    }
    ManifestSource source;
    source.locator = parse_locator(entry, where);

    const std::string format_text = require_string(entry, "format", where);
    const auto format = format_from_name(format_text);
    if (!format) {
      fail(where, "unknown format: " + format_text +
                      " (known: name-list, disease-table, paper-terms)");
    }
    source.format = *format;

    source.pattern = require_string(entry, "pattern", where);
    if (vocab.patterns.count(source.pattern) == 0) {
      fail(where, "unknown pattern: " + source.pattern +
                      " (registered: " + join_sorted(vocab.patterns) + ")");
    }

    source.parent = require_string(entry, "parent", where);
    if (vocab.parents.count(source.parent) == 0) {
      fail(where, "unknown parent: " + source.parent +
                      " (top level: " + join_sorted(vocab.parents) + ")");
    }
    if (auto it = vocab.fixed_parent.find(source.pattern);
        it != vocab.fixed_parent.end() && it->second != source.parent) {
      fail(where, "pattern '" + source.pattern + "' requires parent '" +
                      it->second + "', not '" + source.parent + "'");
    }
    if (auto it = vocab.formats_for.find(source.pattern);
        it != vocab.formats_for.end() &&
        it->second.count(format_text) == 0) {
      fail(where, "pattern '" + source.pattern + "' cannot be fed by format '" +
                      format_text + "' (accepts: " + join_sorted(it->second) +
                      ")");
    }
    manifest.sources.push_back(std::move(source));
  }

  if (auto it = root.find("deprecations"); it != root.end()) {
    manifest.deprecations = parse_locator(*it, "deprecations");
    if (manifest.deprecations->scheme == Scheme::Inline) {
      throw ParseError("deprecations cannot be an inline source");
    }
  }
  if (auto it = root.find("id_registry"); it != root.end()) {
    manifest.id_registry = it->get<std::string>();
    if (manifest.id_registry->empty()) {
      throw ParseError("id_registry must not be empty");
    }
  }
  return manifest;
}

}  // namespace ontoforge::ingest
