#include "ontoforge/serialize/reader.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "ontoforge/diagnostics.hpp"

namespace ontoforge::serialize {

using owl::Axiom;
using owl::ClassExpression;
using owl::EntityRef;

namespace {

bool local_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-';
}

// One axiom line, consumed left to right.
class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line_no,
             const std::map<std::string, std::string>& prefixes)
      : text_(text), line_(line_no), prefixes_(prefixes) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void expect_literal(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal) {
      fail("expected '" + std::string(literal) + "'");
    }
    pos_ += literal.size();
  }

  std::string read_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  // ":local", "pfx:local" or "<iri>".
  EntityRef read_entity() {
    if (peek() == '<') {
      ++pos_;
      const auto close = text_.find('>', pos_);
      if (close == std::string_view::npos) fail("unterminated IRI");
      std::string iri(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return {label_for(iri), std::move(iri)};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':') {
      if (!std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("malformed prefixed name");
      }
      ++pos_;
    }
    if (at_end()) fail("expected ':' in prefixed name");
    const std::string prefix(text_.substr(start, pos_ - start));
    ++pos_;  // ':'
    const std::size_t local_start = pos_;
    while (pos_ < text_.size() && local_char(text_[pos_])) ++pos_;
    const std::string local(
        text_.substr(local_start, pos_ - local_start));
    if (local.empty()) fail("empty local name");
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      fail("unknown prefix '" + prefix + ":'");
    }
    return {local, it->second + local};
  }

  owl::AnnotationId read_annotation_property() {
    const EntityRef entity = read_entity();
    for (auto id : {owl::AnnotationId::Label, owl::AnnotationId::SeeAlso,
                    owl::AnnotationId::Comment, owl::AnnotationId::Deprecated}) {
      if (entity.iri == owl::annotation_iri(id)) return id;
    }
    fail("unknown annotation property <" + entity.iri + ">");
  }

  owl::AnnotationValue read_literal() {
    expect('"');
    std::string text;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      const char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("dangling escape");
        const char e = text_[pos_++];
        switch (e) {
          case '\\':
            text += '\\';
            break;
          case '"':
            text += '"';
            break;
          case 'n':
            text += '\n';
            break;
          case 'r':
            text += '\r';
            break;
          case 't':
            text += '\t';
            break;
          default:
            fail("unsupported escape sequence");
        }
      } else {
        text += c;
      }
    }
    if (peek() == '^') {
      expect_literal("^^<");
      const auto close = text_.find('>', pos_);
      if (close == std::string_view::npos) fail("unterminated datatype IRI");
      const std::string datatype(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      if (datatype != owl::ns::kXsdBoolean) {
        fail("unsupported datatype <" + datatype + ">");
      }
      if (text != "true" && text != "false") {
        fail("boolean literal must be \"true\" or \"false\"");
      }
      return owl::AnnotationValue::boolean(text == "true");
    }
    return owl::AnnotationValue::text(std::move(text));
  }

  ClassExpression read_expression() {
    if (std::isupper(static_cast<unsigned char>(peek())) &&
        text_.substr(pos_, 6) == "Object") {
      const std::string head = read_ident();
      expect('(');
      if (head == "ObjectSomeValuesFrom" || head == "ObjectAllValuesFrom") {
        EntityRef property = read_entity();
        expect(' ');
        ClassExpression filler = read_expression();
        expect(')');
        return head == "ObjectSomeValuesFrom"
                   ? ClassExpression::some(std::move(property),
                                           std::move(filler))
                   : ClassExpression::only(std::move(property),
                                           std::move(filler));
      }
      if (head == "ObjectUnionOf" || head == "ObjectIntersectionOf") {
        std::vector<ClassExpression> operands;
        operands.push_back(read_expression());
        while (peek() == ' ') {
          ++pos_;
          operands.push_back(read_expression());
        }
        expect(')');
        // The writer never emits a unary connective.
        if (operands.size() < 2) fail("connective needs at least 2 operands");
        return head == "ObjectUnionOf"
                   ? ClassExpression::union_of(std::move(operands))
                   : ClassExpression::intersection_of(std::move(operands));
      }
      fail("unknown expression head '" + head + "'");
    }
    return ClassExpression::named(read_entity());
  }

  Axiom read_axiom() {
    const std::string head = read_ident();
    if (head == "Declaration") {
      expect('(');
      const std::string sort = read_ident();
      expect('(');
      EntityRef entity = read_entity();
      expect_literal("))");
      owl::EntitySort entity_sort;
      if (sort == "Class") {
        entity_sort = owl::EntitySort::Class;
      } else if (sort == "ObjectProperty") {
        entity_sort = owl::EntitySort::ObjectProperty;
      } else if (sort == "AnnotationProperty") {
        entity_sort = owl::EntitySort::AnnotationProperty;
      } else {
        fail("unknown declaration sort '" + sort + "'");
      }
      require_line_end();
      return owl::declare(std::move(entity), entity_sort);
    }
    if (head == "SubClassOf") {
      expect('(');
      EntityRef sub = read_entity();
      expect(' ');
      ClassExpression sup = read_expression();
      expect(')');
      require_line_end();
      return owl::subclass_of(std::move(sub), std::move(sup));
    }
    if (head == "AnnotationAssertion") {
      expect('(');
      const owl::AnnotationId property = read_annotation_property();
      expect(' ');
      EntityRef subject = read_entity();
      expect(' ');
      owl::AnnotationValue value = read_literal();
      expect(')');
      require_line_end();
      return Axiom(
          owl::AnnotationAssertion{std::move(subject), property, value});
    }
    fail("unknown axiom '" + head + "'");
  }

  void require_line_end() {
    if (!at_end()) fail("trailing content");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  const std::map<std::string, std::string>& prefixes_;

  // Prefer the registered local name as the recovered label.
  std::string label_for(const std::string& iri) const {
    for (const auto& [name, stem] : prefixes_) {
      if (!stem.empty() && iri.rfind(stem, 0) == 0) {
        return iri.substr(stem.size());
      }
    }
    return iri;
  }
};

std::vector<std::string_view> split_lines(std::string_view text,
                                          std::size_t& first_bad_line) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  first_bad_line = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      first_bad_line = lines.size();  // canonical output ends with a newline
      break;
    }
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

owl::Ontology parse_functional(std::string_view text) {
  std::size_t missing_final_newline = 0;
  const auto lines = split_lines(text, missing_final_newline);
  if (missing_final_newline != 0) {
    throw ParseError("missing final newline", missing_final_newline);
  }
  if (lines.empty()) {
    throw ParseError("empty document", 1);
  }

  std::map<std::string, std::string> prefixes;
  std::string ontology_iri;
  std::size_t index = 0;

  // Prefix block.
  while (index < lines.size() &&
         lines[index].rfind("Prefix(", 0) == 0) {
    const std::size_t line_no = index + 1;
    std::string_view rest = lines[index].substr(7);
    const auto sep = rest.find(":=<");
    if (sep == std::string_view::npos || rest.size() < sep + 4 ||
        rest.substr(rest.size() - 2) != ">)") {
      throw ParseError("malformed prefix line", line_no);
    }
    const std::string name(rest.substr(0, sep));
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c))) {
        throw ParseError("malformed prefix name", line_no);
      }
    }
    const std::string stem(rest.substr(sep + 3, rest.size() - sep - 5));
    if (!prefixes.emplace(name, stem).second) {
      throw ParseError("duplicate prefix '" + name + ":'", line_no);
    }
    ++index;
  }

  // Header.
  if (index >= lines.size() ||
      lines[index].rfind("Ontology(<", 0) != 0 ||
      lines[index].substr(lines[index].size() - 1) != ">") {
    throw ParseError("expected 'Ontology(<iri>'", index + 1);
  }
  ontology_iri = std::string(
      lines[index].substr(10, lines[index].size() - 11));
  ++index;

  owl::Ontology ontology(ontology_iri, prefixes);

  bool closed = false;
  for (; index < lines.size(); ++index) {
    const std::size_t line_no = index + 1;
    std::string_view line = lines[index];
    if (closed) {
      if (!line.empty()) {
        throw ParseError("content after closing ')'", line_no);
      }
      continue;
    }
    if (line == ")") {
      closed = true;
      continue;
    }
    LineParser parser(line, line_no, prefixes);
    ontology.insert(parser.read_axiom());
  }
  if (!closed) {
    throw ParseError("missing closing ')'", lines.size());
  }
  return ontology;
}

}  // namespace ontoforge::serialize
