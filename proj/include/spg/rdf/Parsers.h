#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "spg/rdf/ParseError.h"
#include "spg/rdf/RdfGraph.h"

namespace spg::rdf {

// Namespace that `?name` query variables are mapped into when a parser runs
// with variables enabled.
inline constexpr std::string_view kVariableNamespace = "var:";

struct ParseOptions {
  std::string graphName;
  // Accept `?name` tokens as terms (query patterns only).
  bool allowVariables = false;
};

// Streams an N-Triples document line by line. Throws ParseError.
RdfGraph parseNTriples(std::istream& input, const ParseOptions& options = {});
RdfGraph parseNTriples(std::string_view text, const ParseOptions& options = {});

// Parses the supported Turtle subset: @prefix/@base (and the SPARQL-style
// PREFIX/BASE), prefixed names, `a`, predicate and object lists, and string,
// numeric and boolean literals. Collections and blank-node property lists are
// rejected with an "unsupported Turtle feature" error.
RdfGraph parseTurtle(std::istream& input, const ParseOptions& options = {});
RdfGraph parseTurtle(std::string_view text, const ParseOptions& options = {});

// Parses a single N-Triples term such as `<http://ex.org/a>` or `"1"^^<...>`.
Term parseNTriplesTerm(std::string_view text);

// Canonical N-Triples: one line per triple, sorted by the serialized
// (subject, predicate, object) tuple.
void serializeNTriples(const RdfGraph& graph, std::ostream& out);
std::string serializeNTriples(const RdfGraph& graph);

// Suffix of the IRI after the last '#', else '/', else ':'. Falls back to the
// whole IRI when that suffix is empty.
std::string localName(std::string_view iri);

}  // namespace spg::rdf
