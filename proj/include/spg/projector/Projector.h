#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spg/model/Diagnostics.h"
#include "spg/model/SpgGraph.h"
#include "spg/ontology/OntologySchema.h"
#include "spg/rdf/RdfGraph.h"
#include "spg/rdf/Vocabulary.h"
#include "spg/store/GraphStore.h"

namespace spg::projector {

struct ProjectionConfig {
  rdf::ReificationVocabulary vocabulary;
  // Strict mode turns error diagnostics into a model::DiagnosticError.
  bool strict = true;
  // When set, primary labels prefer the most specific class.
  const ontology::OntologySchema* ontology = nullptr;
  // Worker threads for statement processing. Output does not depend on it.
  unsigned threads = 1;
  // IRIs under this namespace are query variables and render as `?name`.
  std::optional<std::string> variableNamespace;
};

// A reified statement: the statement node, its three components, and every
// other triple hanging off the statement node.
struct StatementDescriptor {
  rdf::Term statement;
  rdf::Term subject;
  rdf::Term predicate;
  rdf::Term object;
  std::vector<rdf::Triple> extras;

  friend bool operator==(const StatementDescriptor&, const StatementDescriptor&) = default;
};

struct StatementScan {
  std::vector<StatementDescriptor> statements;
  model::Diagnostics diagnostics;
};

struct ProjectionResult {
  model::SpgGraph graph;
  model::Diagnostics diagnostics;
};

// A node is a statement node iff it is typed as a statement or carries all
// three components. Incomplete or duplicated components produce an error
// diagnostic and no descriptor. Descriptors are sorted by statement id.
StatementScan findStatements(const rdf::RdfGraph& graph,
                             const rdf::ReificationVocabulary& vocabulary = {});
StatementScan findStatements(const store::GraphStore& store, const std::string& graphName,
                             const rdf::ReificationVocabulary& vocabulary = {});

// Projects reified RDF into a property graph:
//   statement with resource object  -> edge (id = statement node id), extras
//                                      become edge properties;
//   statement with literal object   -> node property on the subject, extras
//                                      keyed `predicate.extra`;
//   residual rdf:type               -> node types;
//   residual literal triple         -> node property;
//   residual resource triple        -> property-less edge `s|p|o|k`.
// Output is in canonical order. Throws model::DiagnosticError in strict mode
// when errors were diagnosed.
ProjectionResult project(const rdf::RdfGraph& graph, const ProjectionConfig& config = {});
ProjectionResult project(const store::GraphStore& store, const std::string& graphName,
                         const ProjectionConfig& config = {});

// Label rule: most specific asserted class under the ontology's subclass
// closure when one is given (ties lexicographic), else the lexicographically
// smallest type, else "Thing".
std::string choosePrimaryLabel(const std::set<std::string>& types,
                               const ontology::OntologySchema* ontology);

}  // namespace spg::projector
