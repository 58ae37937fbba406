#pragma once

#include <map>
#include <string>

#include "spg/model/SpgGraph.h"
#include "spg/rdf/RdfGraph.h"
#include "spg/rdf/Vocabulary.h"

namespace spg::projector {

struct ReifyConfig {
  rdf::ReificationVocabulary vocabulary;
  // Namespace for labels and keys with no entry in `iriForName`.
  std::string defaultNamespace = "http://example.org/spg/";
  // Local name -> IRI for edge labels, types and property keys.
  std::map<std::string, std::string> iriForName;
  // `?name` node ids become IRIs in this namespace.
  std::string variableNamespace = "var:";

  // Builds the name table from the predicates, rdf:type objects and statement
  // predicates of `source`, which lets reify() restore the namespaces a
  // projection dropped.
  static ReifyConfig fromGraph(const rdf::RdfGraph& source,
                               const rdf::ReificationVocabulary& vocabulary = {});

  std::string iriFor(const std::string& name) const;
};

// Inverse of project(). Edges with properties, or whose id is not a
// synthesized `s|p|o|k` id, become statement nodes named after the edge id;
// other edges become direct triples. Node types become rdf:type triples and
// node properties literal triples. A dotted key `p.q` is read as metadata of
// the literal statement behind key `p` and gets its own statement node.
rdf::RdfGraph reify(const model::SpgGraph& graph, const ReifyConfig& config = {});

// Term for a node or edge id: ids containing ':' are IRIs, valid blank labels
// are blank nodes, `?name` is a variable IRI.
rdf::Term termForId(const std::string& id, const ReifyConfig& config);

}  // namespace spg::projector
