#include "Scanner.h"

namespace spg::rdf::detail {

bool isNameStartChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool isNameChar(char c) { return isNameStartChar(c) || (c >= '0' && c <= '9'); }

void appendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::size_t findInvalidUtf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
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
      return i;
    }
    if (i + len > text.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                    (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

void Scanner::failAt(std::size_t offset, const std::string& message) const {
  std::size_t line = firstLine_;
  std::size_t lineStart = 0;
  for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      ++line;
      lineStart = i + 1;
    }
  }
  throw ParseError(line, offset - lineStart + 1, message);
}

void Scanner::skipInlineSpace() {
  while (!atEnd() && (peek() == ' ' || peek() == '\t')) advance();
}

void Scanner::skipSpaceAndComments() {
  while (!atEnd()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance();
    } else if (c == '#') {
      while (!atEnd() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

std::uint32_t Scanner::readHex(std::size_t digits) {
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    char c = peek();
    std::uint32_t d;
    if (c >= '0' && c <= '9') {
      d = static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      d = static_cast<std::uint32_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      d = static_cast<std::uint32_t>(c - 'A' + 10);
    } else {
      fail("bad escape: expected " + std::to_string(digits) + " hex digits");
    }
    value = value * 16 + d;
    advance();
  }
  return value;
}

void Scanner::appendEscape(std::string& out, bool inIri) {
  std::size_t start = offset();
  advance();  // backslash
  char c = peek();
  if (c == 'u' || c == 'U') {
    advance();
    std::uint32_t cp = readHex(c == 'u' ? 4 : 8);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      failAt(start, "bad escape: code point out of range");
    }
    appendUtf8(out, cp);
    return;
  }
  if (inIri) failAt(start, "bad escape: only \\u and \\U are allowed in IRIs");
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    default:
      failAt(start, atEnd() ? "bad escape: backslash at end of input"
                            : std::string("bad escape: \\") + c);
  }
  advance();
}

std::string Scanner::readIriRef() {
  std::size_t start = offset();
  advance();  // '<'
  std::string out;
  while (true) {
    if (atEnd()) failAt(start, "bad IRI: missing closing '>'");
    char c = peek();
    if (c == '>') {
      advance();
      break;
    }
    if (c == '\\') {
      appendEscape(out, true);
      continue;
    }
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`') {
      fail(u == '\n' ? "bad IRI: missing closing '>'"
                     : "bad IRI: character not allowed in IRI");
    }
    out += c;
    advance();
  }
  if (out.empty()) failAt(start, "bad IRI: empty IRI");
  // Escapes may not smuggle in characters that the raw grammar forbids.
  for (char c : out) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"') {
      failAt(start, "bad IRI: escaped character not allowed in IRI");
    }
  }
  return out;
}

std::string Scanner::readBlankLabel() {
  advance(2);  // "_:"
  std::size_t start = offset();
  auto labelChar = [](char c) {
    return isNameChar(c) || c == '-' || c == '.' || static_cast<unsigned char>(c) >= 0x80;
  };
  if (atEnd() || !labelChar(peek())) fail("bad blank node: empty label");
  if (peek() == '-' || peek() == '.') fail("bad blank node: label may not start with '" + std::string(1, peek()) + "'");
  while (!atEnd() && labelChar(peek())) advance();
  // A trailing '.' terminates the statement rather than belonging to the label.
  std::size_t end = offset();
  while (end > start && text_[end - 1] == '.') --end;
  reset(end);
  return std::string(text_.substr(start, end - start));
}

std::string Scanner::readString(bool allowLong, bool allowSingleQuote) {
  std::size_t start = offset();
  char quote = peek();
  if (quote == '\'' && !allowSingleQuote) fail("unexpected character '''");
  bool isLong = allowLong && peek(1) == quote && peek(2) == quote;
  advance(isLong ? 3 : 1);
  std::string out;
  while (true) {
    if (atEnd()) failAt(start, "unterminated string literal");
    char c = peek();
    if (c == '\\') {
      appendEscape(out, false);
      continue;
    }
    if (isLong) {
      if (c == quote && peek(1) == quote && peek(2) == quote) {
        // Up to two extra quotes may precede the closing delimiter.
        if (peek(3) == quote) {
          out += c;
          advance();
          continue;
        }
        advance(3);
        return out;
      }
    } else {
      if (c == quote) {
        advance();
        return out;
      }
      if (c == '\n' || c == '\r') failAt(start, "unterminated string literal");
    }
    out += c;
    advance();
  }
}

std::string Scanner::readLanguageTag() {
  std::size_t start = offset();
  auto isAlpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  while (!atEnd() && isAlpha(peek())) advance();
  if (offset() == start) fail("bad language tag");
  while (peek() == '-' && (isAlpha(peek(1)) || (peek(1) >= '0' && peek(1) <= '9'))) {
    advance();
    while (!atEnd() && (isAlpha(peek()) || (peek() >= '0' && peek() <= '9'))) advance();
  }
  return std::string(text_.substr(start, offset() - start));
}

std::string Scanner::readVariableName() {
  advance();  // '?'
  std::size_t start = offset();
  if (!isNameStartChar(peek())) fail("bad variable name");
  while (!atEnd() && isNameChar(peek())) advance();
  return std::string(text_.substr(start, offset() - start));
}

}  // namespace spg::rdf::detail
