#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "Scanner.h"
#include "spg/rdf/Parsers.h"
#include "spg/rdf/Vocabulary.h"

namespace spg::rdf {

namespace {

using detail::Scanner;

Term variableTerm(const std::string& name) {
  return Term::iri(std::string(kVariableNamespace) + name);
}

Term readIri(Scanner& scanner) {
  std::size_t start = scanner.offset();
  std::string iri = scanner.readIriRef();
  if (!hasIriScheme(iri)) scanner.failAt(start, "bad IRI: relative IRI '" + iri + "'");
  return Term::iri(std::move(iri));
}

Term readLiteral(Scanner& scanner) {
  std::string lexical = scanner.readString(false, false);
  if (scanner.peek() == '@') {
    scanner.advance();
    return Term::langLiteral(std::move(lexical), scanner.readLanguageTag());
  }
  if (scanner.peek() == '^') {
    if (scanner.peek(1) != '^') scanner.fail("expected '^^' before datatype IRI");
    scanner.advance(2);
    if (scanner.peek() != '<') scanner.fail("bad IRI: datatype must be an IRI");
    std::size_t start = scanner.offset();
    Term datatype = readIri(scanner);
    if (datatype.value() == rdf::kLangString) {
      scanner.failAt(start, "rdf:langString literal requires a language tag");
    }
    return Term::literal(std::move(lexical), datatype.value());
  }
  return Term::literal(std::move(lexical));
}

enum class Position { Subject, Predicate, Object };

Term readTerm(Scanner& scanner, Position position, bool allowVariables) {
  char c = scanner.peek();
  if (c == '<') {
    return readIri(scanner);
  }
  if (c == '?' && allowVariables) {
    return variableTerm(scanner.readVariableName());
  }
  if (position == Position::Predicate) {
    scanner.fail("predicate must be an IRI");
  }
  if (c == '_' && scanner.peek(1) == ':') {
    return Term::blank(scanner.readBlankLabel());
  }
  if (c == '"') {
    if (position == Position::Subject) scanner.fail("subject must be an IRI or blank node");
    return readLiteral(scanner);
  }
  if (scanner.atEnd()) {
    scanner.fail(position == Position::Object ? "missing object" : "missing term");
  }
  scanner.fail(position == Position::Subject ? "subject must be an IRI or blank node"
                                             : "expected an IRI, blank node or literal");
}

void parseLine(std::string_view line, std::size_t lineNumber, const ParseOptions& options,
               RdfGraph& graph) {
  Scanner scanner(line, lineNumber);
  if (auto bad = detail::findInvalidUtf8(line); bad != std::string_view::npos) {
    scanner.failAt(bad, "invalid UTF-8 byte sequence");
  }
  scanner.skipInlineSpace();
  if (scanner.atEnd() || scanner.peek() == '#') return;

  Term subject = readTerm(scanner, Position::Subject, options.allowVariables);
  scanner.skipInlineSpace();
  Term predicate = readTerm(scanner, Position::Predicate, options.allowVariables);
  scanner.skipInlineSpace();
  Term object = readTerm(scanner, Position::Object, options.allowVariables);
  scanner.skipInlineSpace();
  if (scanner.peek() != '.') scanner.fail("missing terminating '.'");
  scanner.advance();
  scanner.skipInlineSpace();
  if (!scanner.atEnd() && scanner.peek() != '#') {
    scanner.fail("unexpected content after terminating '.'");
  }
  graph.add(subject, predicate, object);
}

}  // namespace

RdfGraph parseNTriples(std::istream& input, const ParseOptions& options) {
  RdfGraph graph(options.graphName);
  std::string line;
  std::size_t lineNumber = 0;
  while (std::getline(input, line)) {
    ++lineNumber;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    parseLine(line, lineNumber, options, graph);
  }
  return graph;
}

RdfGraph parseNTriples(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parseNTriples(in, options);
}

Term parseNTriplesTerm(std::string_view text) {
  Scanner scanner(text);
  scanner.skipInlineSpace();
  Term term = readTerm(scanner, Position::Object, false);
  scanner.skipInlineSpace();
  if (!scanner.atEnd()) scanner.fail("unexpected content after term");
  return term;
}

void serializeNTriples(const RdfGraph& graph, std::ostream& out) {
  // Serialize each distinct term once, then sort the encoded triples.
  std::vector<std::string> forms(graph.dictionary().size());
  for (TermId id = 0; id < forms.size(); ++id) forms[id] = graph.term(id).toNTriples();

  std::vector<EncodedTriple> sorted(graph.encoded().begin(), graph.encoded().end());
  std::sort(sorted.begin(), sorted.end(), [&](const EncodedTriple& a, const EncodedTriple& b) {
    return std::tie(forms[a.subject], forms[a.predicate], forms[a.object]) <
           std::tie(forms[b.subject], forms[b.predicate], forms[b.object]);
  });
  for (const auto& t : sorted) {
    out << forms[t.subject] << ' ' << forms[t.predicate] << ' ' << forms[t.object]
        << " .\n";
  }
}

std::string serializeNTriples(const RdfGraph& graph) {
  std::ostringstream out;
  serializeNTriples(graph, out);
  return out.str();
}

std::string localName(std::string_view iri) {
  std::size_t cut = iri.rfind('#');
  if (cut == std::string_view::npos) cut = iri.rfind('/');
  if (cut == std::string_view::npos) cut = iri.rfind(':');
  if (cut == std::string_view::npos || cut + 1 >= iri.size()) return std::string(iri);
  return std::string(iri.substr(cut + 1));
}

}  // namespace spg::rdf
