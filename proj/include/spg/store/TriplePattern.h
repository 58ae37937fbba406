#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spg/rdf/Term.h"

namespace spg::store {

struct Variable {
  std::string name;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<rdf::Term, Variable>;

bool isValidVariableName(std::string_view name);

// One triple of a basic graph pattern. A pattern without variables is a
// membership test.
struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  // Distinct variable names in subject, predicate, object order.
  std::vector<std::string> variables() const;
  // Throws std::invalid_argument on a malformed variable name.
  void validate() const;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

using PrefixMap = std::map<std::string, std::string, std::less<>>;

// Prefixes `rdf`, `rdfs`, `xsd` and `owl` are always available.
PrefixMap defaultPrefixes();

// Parses `?st rdf:subject ?u` style text. Terms are `?var`, `<iri>`, `_:b`,
// N-Triples literals, `a`, or `prefix:local`. A trailing '.' is optional.
// Throws std::invalid_argument.
TriplePattern parseTriplePattern(std::string_view text, const PrefixMap& prefixes);

std::string toString(const PatternTerm& term);
std::string toString(const TriplePattern& pattern);

}  // namespace spg::store
