#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace spg::rdf {

// An RDF node. IRIs hold the absolute IRI string, blank nodes their label
// without the `_:` prefix, literals their lexical form plus a datatype and an
// optional language tag.
class Term {
 public:
  enum class Kind : std::uint8_t { Iri, Blank, Literal };

  Term() = default;

  // The factories enforce the term invariants and throw std::invalid_argument.
  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical);
  static Term literal(std::string lexical, std::string datatype);
  static Term langLiteral(std::string lexical, std::string language);

  Kind kind() const { return kind_; }
  bool isIri() const { return kind_ == Kind::Iri; }
  bool isBlank() const { return kind_ == Kind::Blank; }
  bool isLiteral() const { return kind_ == Kind::Literal; }
  bool isResource() const { return kind_ != Kind::Literal; }

  // IRI string, blank label or lexical form.
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  // N-Triples surface form, e.g. `<http://ex.org/a>`, `_:b0`, `"x"@en`.
  std::string toNTriples() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  Kind kind_ = Kind::Iri;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

struct TermHash {
  std::size_t operator()(const Term& term) const noexcept;
};

// True for a non-empty string with a scheme and none of the characters that
// may not appear unescaped in an IRI reference.
bool isAbsoluteIri(std::string_view iri);
bool hasIriScheme(std::string_view iri);
bool isValidIriText(std::string_view iri);
bool isValidBlankLabel(std::string_view label);
bool isValidLanguageTag(std::string_view tag);

// Appends the N-Triples escaped form of `lexical` (without the quotes).
void appendEscapedLiteral(std::string& out, std::string_view lexical);
void appendEscapedIri(std::string& out, std::string_view iri);

}  // namespace spg::rdf
