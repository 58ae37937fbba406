#include <istream>
#include <iterator>
#include <map>

#include "Scanner.h"
#include "spg/rdf/Parsers.h"
#include "spg/rdf/Vocabulary.h"

namespace spg::rdf {

namespace {

using detail::Scanner;

bool isPnChar(char c) {
  return detail::isNameChar(c) || c == '-' || static_cast<unsigned char>(c) >= 0x80;
}

class TurtleReader {
 public:
  TurtleReader(std::string_view text, const ParseOptions& options)
      : scanner_(text), options_(options), graph_(options.graphName) {}

  RdfGraph run() {
    if (auto bad = detail::findInvalidUtf8(scanner_.text()); bad != std::string_view::npos) {
      scanner_.failAt(bad, "invalid UTF-8 byte sequence");
    }
    while (true) {
      scanner_.skipSpaceAndComments();
      if (scanner_.atEnd()) break;
      statement();
    }
    return std::move(graph_);
  }

 private:
  void statement() {
    if (scanner_.peek() == '@') {
      directive();
      return;
    }
    if (matchKeyword("PREFIX")) {
      prefixBody(false);
      return;
    }
    if (matchKeyword("BASE")) {
      baseBody(false);
      return;
    }
    Term subject = subjectTerm();
    predicateObjectList(subject);
    expect('.', "missing terminating '.'");
  }

  // Case-insensitive keyword followed by whitespace.
  bool matchKeyword(std::string_view keyword) {
    for (std::size_t i = 0; i < keyword.size(); ++i) {
      char c = scanner_.peek(i);
      if (c == '\0' || (c & ~0x20) != keyword[i]) return false;
    }
    char after = scanner_.peek(keyword.size());
    if (after != ' ' && after != '\t' && after != '\n' && after != '\r') return false;
    scanner_.advance(keyword.size());
    return true;
  }

  void directive() {
    std::size_t start = scanner_.offset();
    scanner_.advance();
    if (scanner_.startsWith("prefix")) {
      scanner_.advance(6);
      prefixBody(true);
    } else if (scanner_.startsWith("base")) {
      scanner_.advance(4);
      baseBody(true);
    } else {
      scanner_.failAt(start, "unknown directive");
    }
  }

  void prefixBody(bool needsDot) {
    scanner_.skipSpaceAndComments();
    std::size_t start = scanner_.offset();
    std::string prefix;
    while (!scanner_.atEnd() && scanner_.peek() != ':') {
      if (!isPnChar(scanner_.peek()) && scanner_.peek() != '.') {
        scanner_.fail("bad prefix declaration: expected 'prefix:'");
      }
      prefix += scanner_.peek();
      scanner_.advance();
    }
    if (scanner_.peek() != ':' || (!prefix.empty() && !detail::isNameStartChar(prefix[0]))) {
      scanner_.failAt(start, "bad prefix declaration: expected 'prefix:'");
    }
    scanner_.advance();
    scanner_.skipSpaceAndComments();
    if (scanner_.peek() != '<') scanner_.fail("bad prefix declaration: expected IRI");
    prefixes_[prefix] = resolve(scanner_.offset(), scanner_.readIriRef());
    if (needsDot) expect('.', "missing terminating '.' after @prefix");
  }

  void baseBody(bool needsDot) {
    scanner_.skipSpaceAndComments();
    if (scanner_.peek() != '<') scanner_.fail("bad base declaration: expected IRI");
    base_ = resolve(scanner_.offset(), scanner_.readIriRef());
    if (needsDot) expect('.', "missing terminating '.' after @base");
  }

  std::string resolve(std::size_t offset, std::string iri) {
    if (hasIriScheme(iri)) return iri;
    if (base_.empty()) scanner_.failAt(offset, "bad IRI: relative IRI '" + iri + "' without @base");
    return base_ + iri;
  }

  void expect(char c, const std::string& message) {
    scanner_.skipSpaceAndComments();
    if (scanner_.peek() != c) scanner_.fail(message);
    scanner_.advance();
  }

  [[noreturn]] void unsupported(const char* what) {
    scanner_.fail(std::string("unsupported Turtle feature: ") + what);
  }

  Term subjectTerm() {
    scanner_.skipSpaceAndComments();
    char c = scanner_.peek();
    if (c == '[') unsupported("blank-node property list");
    if (c == '(') unsupported("collection");
    if (c == '"' || c == '\'' || c == '+' || c == '-' || (c >= '0' && c <= '9')) {
      scanner_.fail("subject must be an IRI or blank node");
    }
    return resource(true);
  }

  // IRI, prefixed name, blank node or variable.
  Term resource(bool allowBlank) {
    char c = scanner_.peek();
    if (c == '<') {
      std::size_t start = scanner_.offset();
      return Term::iri(resolve(start, scanner_.readIriRef()));
    }
    if (c == '?' && options_.allowVariables) {
      return Term::iri(std::string(kVariableNamespace) + scanner_.readVariableName());
    }
    if (c == '_' && scanner_.peek(1) == ':') {
      if (!allowBlank) scanner_.fail("predicate must be an IRI");
      return Term::blank(scanner_.readBlankLabel());
    }
    if (isPnChar(c) || c == ':') {
      return prefixedName();
    }
    if (scanner_.atEnd()) scanner_.fail("unexpected end of input");
    scanner_.fail(std::string("unexpected character '") + c + "'");
  }

  Term prefixedName() {
    std::size_t start = scanner_.offset();
    std::string prefix;
    while (!scanner_.atEnd() && (isPnChar(scanner_.peek()) || scanner_.peek() == '.')) {
      prefix += scanner_.peek();
      scanner_.advance();
    }
    // A run of name characters not followed by ':' is a keyword, not a name.
    if (scanner_.peek() != ':') {
      while (!prefix.empty() && prefix.back() == '.') {
        prefix.pop_back();
      }
      scanner_.failAt(start, "unexpected token '" + prefix + "'");
    }
    scanner_.advance();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) scanner_.failAt(start, "undefined prefix '" + prefix + ":'");

    std::string local;
    while (!scanner_.atEnd()) {
      char c = scanner_.peek();
      if (isPnChar(c) || c == ':' || c == '.') {
        local += c;
        scanner_.advance();
      } else if (c == '%') {
        local += c;
        scanner_.advance();
      } else if (c == '\\' && scanner_.peek(1) != '\0' &&
                 std::string_view("_~.-!$&'()*+,;=/?#@%").find(scanner_.peek(1)) !=
                     std::string_view::npos) {
        local += scanner_.peek(1);
        scanner_.advance(2);
      } else {
        break;
      }
    }
    // A trailing '.' terminates the statement rather than the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      scanner_.reset(scanner_.offset() - 1);
    }
    std::string iri = it->second + local;
    if (!isAbsoluteIri(iri)) scanner_.failAt(start, "bad IRI: '" + iri + "'");
    return Term::iri(std::move(iri));
  }

  Term verb() {
    scanner_.skipSpaceAndComments();
    if (scanner_.peek() == 'a' && !isPnChar(scanner_.peek(1)) && scanner_.peek(1) != ':' &&
        scanner_.peek(1) != '.') {
      scanner_.advance();
      return Term::iri(rdf::kType);
    }
    char c = scanner_.peek();
    if (c == '"' || c == '\'' || c == '[' || c == '(' || c == '+' || c == '-' ||
        (c >= '0' && c <= '9')) {
      scanner_.fail("predicate must be an IRI");
    }
    return resource(false);
  }

  void predicateObjectList(const Term& subject) {
    while (true) {
      Term predicate = verb();
      objectList(subject, predicate);
      scanner_.skipSpaceAndComments();
      if (scanner_.peek() != ';') return;
      // Repeated and trailing semicolons are allowed.
      while (scanner_.peek() == ';') {
        scanner_.advance();
        scanner_.skipSpaceAndComments();
      }
      if (scanner_.peek() == '.' || scanner_.peek() == ']') return;
    }
  }

  void objectList(const Term& subject, const Term& predicate) {
    while (true) {
      scanner_.skipSpaceAndComments();
      graph_.add(subject, predicate, object());
      scanner_.skipSpaceAndComments();
      if (scanner_.peek() != ',') return;
      scanner_.advance();
    }
  }

  Term object() {
    char c = scanner_.peek();
    if (c == '[') unsupported("blank-node property list");
    if (c == '(') unsupported("collection");
    if (c == '"' || c == '\'') return stringLiteral();
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return numericLiteral();
    if (keywordAhead("true")) return Term::literal("true", xsd::kBoolean);
    if (keywordAhead("false")) return Term::literal("false", xsd::kBoolean);
    if (scanner_.atEnd()) scanner_.fail("missing object");
    return resource(true);
  }

  bool keywordAhead(std::string_view word) {
    if (!scanner_.startsWith(word)) return false;
    char after = scanner_.peek(word.size());
    if (isPnChar(after) || after == ':') return false;
    scanner_.advance(word.size());
    return true;
  }

  Term stringLiteral() {
    std::string lexical = scanner_.readString(true, true);
    if (scanner_.peek() == '@') {
      scanner_.advance();
      return Term::langLiteral(std::move(lexical), scanner_.readLanguageTag());
    }
    if (scanner_.peek() == '^' && scanner_.peek(1) == '^') {
      scanner_.advance(2);
      std::size_t start = scanner_.offset();
      Term datatype = resource(false);
      if (datatype.value() == rdf::kLangString) {
        scanner_.failAt(start, "rdf:langString literal requires a language tag");
      }
      return Term::literal(std::move(lexical), datatype.value());
    }
    return Term::literal(std::move(lexical));
  }

  Term numericLiteral() {
    std::size_t start = scanner_.offset();
    auto digits = [&] {
      std::size_t n = 0;
      while (scanner_.peek() >= '0' && scanner_.peek() <= '9') {
        scanner_.advance();
        ++n;
      }
      return n;
    };
    if (scanner_.peek() == '+' || scanner_.peek() == '-') scanner_.advance();
    std::size_t intDigits = digits();
    std::size_t fracDigits = 0;
    bool hasDot = false;
    if (scanner_.peek() == '.' && scanner_.peek(1) >= '0' && scanner_.peek(1) <= '9') {
      hasDot = true;
      scanner_.advance();
      fracDigits = digits();
    }
    bool hasExponent = false;
    if ((scanner_.peek() == 'e' || scanner_.peek() == 'E') && (intDigits + fracDigits) > 0) {
      hasExponent = true;
      scanner_.advance();
      if (scanner_.peek() == '+' || scanner_.peek() == '-') scanner_.advance();
      if (digits() == 0) scanner_.failAt(start, "bad numeric literal");
    }
    if (intDigits + fracDigits == 0) scanner_.failAt(start, "bad numeric literal");
    std::string lexical(scanner_.text().substr(start, scanner_.offset() - start));
    const std::string& datatype =
        hasExponent ? xsd::kDouble : (hasDot ? xsd::kDecimal : xsd::kInteger);
    return Term::literal(std::move(lexical), datatype);
  }

  Scanner scanner_;
  const ParseOptions& options_;
  RdfGraph graph_;
  std::map<std::string, std::string> prefixes_;
  std::string base_;
};

}  // namespace

RdfGraph parseTurtle(std::string_view text, const ParseOptions& options) {
  return TurtleReader(text, options).run();
}

RdfGraph parseTurtle(std::istream& input, const ParseOptions& options) {
  std::string text(std::istreambuf_iterator<char>(input), {});
  return parseTurtle(text, options);
}

}  // namespace spg::rdf
