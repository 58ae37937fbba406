#include "spg/store/TriplePattern.h"

#include <stdexcept>

#include "spg/rdf/Parsers.h"
#include "spg/rdf/Vocabulary.h"

namespace spg::store {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto isSpace = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && isSpace(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    if (text[i] == '"') {
      ++i;
      while (i < text.size() && text[i] != '"') i += text[i] == '\\' ? 2 : 1;
      if (i >= text.size()) throw std::invalid_argument("unterminated literal in pattern");
      ++i;
    } else if (text[i] == '<') {
      while (i < text.size() && text[i] != '>') ++i;
      if (i >= text.size()) throw std::invalid_argument("unterminated IRI in pattern");
      ++i;
    }
    while (i < text.size() && !isSpace(text[i])) ++i;
    tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::string expandPrefixed(std::string_view token, const PrefixMap& prefixes) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("cannot interpret pattern term '" + std::string(token) + "'");
  }
  auto it = prefixes.find(token.substr(0, colon));
  if (it == prefixes.end()) {
    throw std::invalid_argument("undefined prefix '" + std::string(token.substr(0, colon + 1)) +
                                "'");
  }
  return it->second + std::string(token.substr(colon + 1));
}

PatternTerm parseTerm(const std::string& token, const PrefixMap& prefixes) {
  if (token.starts_with('?')) {
    Variable var{token.substr(1)};
    if (!isValidVariableName(var.name)) {
      throw std::invalid_argument("invalid variable name '" + token + "'");
    }
    return var;
  }
  if (token == "a") return rdf::Term::iri(rdf::rdf::kType);
  try {
    if (token.starts_with('"')) {
      auto close = token.rfind('"');
      std::string_view rest = std::string_view(token).substr(close + 1);
      if (rest.starts_with("^^") && rest.size() > 2 && rest[2] != '<') {
        std::string rebuilt = token.substr(0, close + 1) + "^^<" +
                              expandPrefixed(rest.substr(2), prefixes) + ">";
        return rdf::parseNTriplesTerm(rebuilt);
      }
      return rdf::parseNTriplesTerm(token);
    }
    if (token.starts_with('<') || token.starts_with("_:")) {
      return rdf::parseNTriplesTerm(token);
    }
  } catch (const rdf::ParseError& e) {
    throw std::invalid_argument("bad pattern term '" + token + "': " + e.reason());
  }
  return rdf::Term::iri(expandPrefixed(token, prefixes));
}

}  // namespace

bool isValidVariableName(std::string_view name) {
  if (name.empty()) return false;
  auto start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!start(name[0])) return false;
  for (char c : name) {
    if (!start(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

std::vector<std::string> TriplePattern::variables() const {
  std::vector<std::string> out;
  for (const PatternTerm* term : {&subject, &predicate, &object}) {
    if (const auto* var = std::get_if<Variable>(term)) {
      bool seen = false;
      for (const auto& name : out) seen = seen || name == var->name;
      if (!seen) out.push_back(var->name);
    }
  }
  return out;
}

void TriplePattern::validate() const {
  for (const PatternTerm* term : {&subject, &predicate, &object}) {
    if (const auto* var = std::get_if<Variable>(term)) {
      if (!isValidVariableName(var->name)) {
        throw std::invalid_argument("invalid variable name '?" + var->name + "'");
      }
    }
  }
}

PrefixMap defaultPrefixes() {
  return PrefixMap{{"rdf", std::string(rdf::ns::kRdf)},
                   {"rdfs", std::string(rdf::ns::kRdfs)},
                   {"xsd", std::string(rdf::ns::kXsd)},
                   {"owl", std::string(rdf::ns::kOwl)}};
}

TriplePattern parseTriplePattern(std::string_view text, const PrefixMap& prefixes) {
  std::vector<std::string> tokens = tokenize(text);
  if (!tokens.empty() && tokens.back() == ".") tokens.pop_back();
  if (tokens.size() != 3) {
    throw std::invalid_argument("triple pattern needs exactly three terms: '" +
                                std::string(text) + "'");
  }
  TriplePattern pattern{parseTerm(tokens[0], prefixes), parseTerm(tokens[1], prefixes),
                        parseTerm(tokens[2], prefixes)};
  if (const auto* s = std::get_if<rdf::Term>(&pattern.subject); s && s->isLiteral()) {
    throw std::invalid_argument("pattern subject must not be a literal");
  }
  if (const auto* p = std::get_if<rdf::Term>(&pattern.predicate); p && !p->isIri()) {
    throw std::invalid_argument("pattern predicate must be an IRI or variable");
  }
  return pattern;
}

std::string toString(const PatternTerm& term) {
  if (const auto* var = std::get_if<Variable>(&term)) return "?" + var->name;
  return std::get<rdf::Term>(term).toNTriples();
}

std::string toString(const TriplePattern& pattern) {
  return toString(pattern.subject) + " " + toString(pattern.predicate) + " " +
         toString(pattern.object) + " .";
}

}  // namespace spg::store
