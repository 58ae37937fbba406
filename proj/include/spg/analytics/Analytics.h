#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "spg/model/SpgGraph.h"
#include "spg/projector/Projector.h"
#include "spg/rdf/RdfGraph.h"

namespace spg::analytics {

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> node count
  std::size_t nodes = 0;
  std::size_t edges = 0;

  std::size_t maxDegree() const { return counts.empty() ? 0 : counts.rbegin()->first; }
  std::size_t degreeSum() const;

  // `degree,count` header, then one row per degree ascending.
  void writeCsv(std::ostream& out) const;
  std::string toCsv() const;

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;
};

// Triple view: subjects and objects (literals included) are nodes, each
// triple adds one to the degree of its subject and of its object.
DegreeHistogram degreeHistogram(const rdf::RdfGraph& graph);
// Incident edges per node, in plus out; isolated nodes have degree 0.
DegreeHistogram degreeHistogram(const model::SpgGraph& graph);

// Node of highest degree; ties go to the smallest N-Triples form / node id.
std::optional<rdf::Term> maxDegreeTerm(const rdf::RdfGraph& graph);
std::optional<std::string> maxDegreeNode(const model::SpgGraph& graph);

struct CompactionMetrics {
  std::size_t rdfNodes = 0;
  std::size_t rdfTriples = 0;
  std::size_t spgNodes = 0;
  std::size_t spgEdges = 0;
  // rdf / spg; absent when the denominator is zero.
  std::optional<double> nodeRatio;
  std::optional<double> edgeRatio;

  // `key=value` lines; absent ratios print as `none`.
  std::string toKeyValue() const;
  std::string toJson() const;
};

CompactionMetrics compactionMetrics(const rdf::RdfGraph& graph, const model::SpgGraph& spg);

// True when the graph mentions a term from the query variable namespace.
bool hasVariables(const rdf::RdfGraph& pattern);

// Projects a reified query pattern into a template whose variable nodes are
// named `?name`.
projector::ProjectionResult compactQuery(const rdf::RdfGraph& pattern,
                                         projector::ProjectionConfig config = {});

}  // namespace spg::analytics
