#pragma once

// Character-level lexing shared by the N-Triples and Turtle readers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "spg/rdf/ParseError.h"

namespace spg::rdf::detail {

class Scanner {
 public:
  // `firstLine` is the document line number of text[0].
  explicit Scanner(std::string_view text, std::size_t firstLine = 1)
      : text_(text), firstLine_(firstLine) {}

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool startsWith(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::size_t offset() const { return pos_; }
  void reset(std::size_t offset) { pos_ = offset; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& message) const { failAt(pos_, message); }
  [[noreturn]] void failAt(std::size_t offset, const std::string& message) const;

  // Spaces and tabs only.
  void skipInlineSpace();
  // Whitespace including newlines, and `#` comments.
  void skipSpaceAndComments();

  // At '<'. Returns the decoded IRI text (not checked for absoluteness).
  std::string readIriRef();
  // At "_:".
  std::string readBlankLabel();
  // At a quote character. Long (triple-quoted) strings only when allowed.
  std::string readString(bool allowLong, bool allowSingleQuote);
  // After '@'.
  std::string readLanguageTag();
  // At '?'.
  std::string readVariableName();

 private:
  void appendEscape(std::string& out, bool inIri);
  std::uint32_t readHex(std::size_t digits);

  std::string_view text_;
  std::size_t firstLine_;
  std::size_t pos_ = 0;
};

void appendUtf8(std::string& out, std::uint32_t codePoint);

// Offset of the first byte that is not part of a well-formed UTF-8 sequence,
// or npos.
std::size_t findInvalidUtf8(std::string_view text);

bool isNameStartChar(char c);
bool isNameChar(char c);

}  // namespace spg::rdf::detail
