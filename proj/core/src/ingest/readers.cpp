#include "ontoforge/ingest/readers.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "ontoforge/diagnostics.hpp"

namespace ontoforge::ingest {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

// Calls fn(line, line_no) for every data line, with CRLF normalized,
// blanks and # comments already skipped.
template <typename Fn>
void for_each_data_line(std::string_view bytes, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const auto eol = bytes.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? bytes.substr(pos)
                                : bytes.substr(pos, eol - pos);
    const bool last = eol == std::string_view::npos;
    pos = last ? bytes.size() + 1 : eol + 1;
    ++line_no;
    if (last && line.empty()) break;  // no final newline vs. empty tail
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    fn(line, line_no);
  }
}

void require_utf8(std::string_view bytes) {
  if (auto offset = find_invalid_utf8(bytes)) {
    throw ParseError("invalid UTF-8 at byte offset " +
                     std::to_string(*offset));
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

}  // namespace

std::optional<std::size_t> find_invalid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;  // stray continuation or invalid lead byte
    }
    if (i + len > n) return i;  // truncated sequence
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (len == 2 && cp < 0x80) return i;      // overlong
    if (len == 3 && cp < 0x800) return i;     // overlong
    if (len == 4 && cp < 0x10000) return i;   // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return i;  // surrogate
    if (cp > 0x10FFFF) return i;
    i += len;
  }
  return std::nullopt;
}

std::vector<NameRecord> read_name_list(std::string_view bytes) {
  require_utf8(bytes);
  std::vector<NameRecord> out;
  std::map<std::string, std::size_t> seen;
  for_each_data_line(bytes, [&](std::string_view line, std::size_t line_no) {
    const std::string name{trim(line)};
    auto [it, fresh] = seen.emplace(name, line_no);
    if (!fresh) {
      throw ParseError("duplicate name '" + name + "' (already seen at line " +
                           std::to_string(it->second) + ")",
                       line_no);
    }
    out.push_back({name, line_no});
  });
  return out;
}

std::vector<DiseaseRecord> read_disease_table(std::string_view bytes) {
  require_utf8(bytes);
  std::vector<DiseaseRecord> out;
  std::map<std::string, std::size_t> seen;
  for_each_data_line(bytes, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError("expected 3 tab-separated columns, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    DiseaseRecord record;
    record.name = std::string{trim(fields[0])};
    record.line = line_no;
    if (record.name.empty()) {
      throw ParseError("empty disease name", line_no);
    }
    auto [it, fresh] = seen.emplace(record.name, line_no);
    if (!fresh) {
      throw ParseError("duplicate name '" + record.name +
                           "' (already seen at line " +
                           std::to_string(it->second) + ")",
                       line_no);
    }
    const std::string omim{trim(fields[1])};
    const std::string long_name{trim(fields[2])};
    if (!omim.empty()) record.omim = omim;
    if (!long_name.empty()) record.long_name = long_name;
    out.push_back(std::move(record));
  });
  return out;
}

std::vector<TermRecord> read_paper_terms(std::string_view bytes) {
  require_utf8(bytes);
  std::vector<TermRecord> out;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for_each_data_line(bytes, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected 2 tab-separated columns, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    TermRecord record;
    record.paper_id = std::string{trim(fields[0])};
    record.term = std::string{trim(fields[1])};
    record.line = line_no;
    if (record.paper_id.empty() || record.term.empty()) {
      throw ParseError("empty column; expected 'paper_id<TAB>term'", line_no);
    }
    auto [it, fresh] =
        seen.emplace(std::make_pair(record.paper_id, record.term), line_no);
    if (!fresh) {
      throw ParseError("duplicate entry '" + record.paper_id + "' / '" +
                           record.term + "' (already seen at line " +
                           std::to_string(it->second) + ")",
                       line_no);
    }
    out.push_back(std::move(record));
  });
  return out;
}

}  // namespace ontoforge::ingest
