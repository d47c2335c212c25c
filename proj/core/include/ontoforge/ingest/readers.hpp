#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ontoforge/records.hpp"

namespace ontoforge::ingest {

// Byte offset of the first invalid UTF-8 sequence (overlong forms,
// surrogates, truncation, > U+10FFFF), or nullopt when clean.
std::optional<std::size_t> find_invalid_utf8(std::string_view bytes);

// All readers: UTF-8 input, LF or CRLF line ends, blank lines and
// `#`-prefixed comment lines skipped, fields trimmed of surrounding
// whitespace. Malformed content throws ParseError with the 1-based line.

// One name per line. Duplicates are an error naming both occurrences,
// never a silent dedup.
std::vector<NameRecord> read_name_list(std::string_view bytes);

// Exactly three tab-separated columns per row: name, OMIM id, long name.
// An empty second or third column means the field is absent.
std::vector<DiseaseRecord> read_disease_table(std::string_view bytes);

// Exactly two tab-separated, non-empty columns per row: paper id, term.
// A duplicated (paper id, term) pair is an error.
std::vector<TermRecord> read_paper_terms(std::string_view bytes);

}  // namespace ontoforge::ingest
