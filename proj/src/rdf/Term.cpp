#include "spg/rdf/Term.h"

#include <cstdio>
#include <functional>
#include <stdexcept>

#include "spg/rdf/Vocabulary.h"

namespace spg::rdf {

namespace {

bool isAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool isDigit(char c) { return c >= '0' && c <= '9'; }

void appendUcharEscape(std::string& out, unsigned char c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(c));
  out += buf;
}

}  // namespace

bool hasIriScheme(std::string_view iri) {
  if (iri.empty() || !isAlpha(iri.front())) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!isAlpha(c) && !isDigit(c) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

bool isValidIriText(std::string_view iri) {
  if (iri.empty()) return false;
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"') return false;
  }
  return true;
}

bool isAbsoluteIri(std::string_view iri) {
  return isValidIriText(iri) && hasIriScheme(iri);
}

bool isValidBlankLabel(std::string_view label) {
  if (label.empty() || label.front() == '-' || label.front() == '.' || label.back() == '.') {
    return false;
  }
  for (char c : label) {
    bool ok = isAlpha(c) || isDigit(c) || c == '_' || c == '-' || c == '.' ||
              static_cast<unsigned char>(c) >= 0x80;
    if (!ok) return false;
  }
  return true;
}

bool isValidLanguageTag(std::string_view tag) {
  // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::size_t i = 0;
  while (i < tag.size() && isAlpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    std::size_t start = ++i;
    while (i < tag.size() && (isAlpha(tag[i]) || isDigit(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

Term Term::iri(std::string value) {
  if (!isAbsoluteIri(value)) {
    throw std::invalid_argument("not an absolute IRI: '" + value + "'");
  }
  return Term(Kind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (!isValidBlankLabel(label)) {
    throw std::invalid_argument("invalid blank node label: '" + label + "'");
  }
  return Term(Kind::Blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(Kind::Literal, std::move(lexical), xsd::kString, {});
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (!isAbsoluteIri(datatype)) {
    throw std::invalid_argument("literal datatype is not an absolute IRI: '" +
                                datatype + "'");
  }
  if (datatype == rdf::kLangString) {
    throw std::invalid_argument("rdf:langString literal requires a language tag");
  }
  return Term(Kind::Literal, std::move(lexical), std::move(datatype), {});
}

Term Term::langLiteral(std::string lexical, std::string language) {
  if (!isValidLanguageTag(language)) {
    throw std::invalid_argument("invalid language tag: '" + language + "'");
  }
  return Term(Kind::Literal, std::move(lexical), rdf::kLangString,
              std::move(language));
}

void appendEscapedLiteral(std::string& out, std::string_view lexical) {
  for (char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7F) {
          appendUcharEscape(out, u);
        } else {
          out += c;
        }
      }
    }
  }
}

void appendEscapedIri(std::string& out, std::string_view iri) {
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '{' || c == '}' || c == '|' || c == '^' || c == '`' ||
        c == '\\' || c == '<' || c == '>' || c == '"') {
      appendUcharEscape(out, u);
    } else {
      out += c;
    }
  }
}

std::string Term::toNTriples() const {
  std::string out;
  switch (kind_) {
    case Kind::Iri:
      out.reserve(value_.size() + 2);
      out += '<';
      appendEscapedIri(out, value_);
      out += '>';
      break;
    case Kind::Blank:
      out = "_:" + value_;
      break;
    case Kind::Literal:
      out.reserve(value_.size() + 2);
      out += '"';
      appendEscapedLiteral(out, value_);
      out += '"';
      if (!language_.empty()) {
        out += '@';
        out += language_;
      } else if (datatype_ != xsd::kString) {
        out += "^^<";
        appendEscapedIri(out, datatype_);
        out += '>';
      }
      break;
  }
  return out;
}

std::size_t TermHash::operator()(const Term& term) const noexcept {
  std::size_t h = std::hash<std::string>{}(term.value());
  h ^= static_cast<std::size_t>(term.kind()) + 0x9E3779B9 + (h << 6) + (h >> 2);
  if (term.isLiteral()) {
    h ^= std::hash<std::string>{}(term.datatype()) + 0x9E3779B9 + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(term.language()) + 0x9E3779B9 + (h << 6) + (h >> 2);
  }
  return h;
}

void ReificationVocabulary::validate() const {
  const std::string* all[] = {&type, &statement, &subject, &predicate, &object};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!isAbsoluteIri(*all[i])) {
      throw std::invalid_argument("reification vocabulary IRI is not absolute: '" +
                                  *all[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (*all[i] == *all[j]) {
        throw std::invalid_argument("reification vocabulary IRIs must be distinct: '" +
                                    *all[i] + "'");
      }
    }
  }
}

}  // namespace spg::rdf
