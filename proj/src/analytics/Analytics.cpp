#include "spg/analytics/Analytics.h"

#include <ostream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "spg/model/PropertyValue.h"
#include "spg/rdf/Parsers.h"

namespace spg::analytics {

namespace {

template <typename Degrees>
DegreeHistogram fromDegrees(const Degrees& degrees, std::size_t edges) {
  DegreeHistogram h;
  h.edges = edges;
  h.nodes = degrees.size();
  for (const auto& [node, degree] : degrees) ++h.counts[degree];
  return h;
}

std::unordered_map<rdf::TermId, std::size_t> rdfDegrees(const rdf::RdfGraph& graph) {
  std::unordered_map<rdf::TermId, std::size_t> degrees;
  for (const auto& t : graph.encoded()) {
    ++degrees[t.subject];
    ++degrees[t.object];
  }
  return degrees;
}

std::map<std::string, std::size_t> spgDegrees(const model::SpgGraph& graph) {
  std::map<std::string, std::size_t> degrees;
  for (const auto& [id, node] : graph.nodes()) degrees[id] = 0;
  for (const auto& e : graph.edges()) {
    ++degrees[e.source];
    ++degrees[e.target];
  }
  return degrees;
}

}  // namespace

std::size_t DegreeHistogram::degreeSum() const {
  std::size_t sum = 0;
  for (const auto& [degree, count] : counts) sum += degree * count;
  return sum;
}

void DegreeHistogram::writeCsv(std::ostream& out) const {
  out << "degree,count\n";
  for (const auto& [degree, count] : counts) out << degree << ',' << count << '\n';
}

std::string DegreeHistogram::toCsv() const {
  std::ostringstream out;
  writeCsv(out);
  return out.str();
}

DegreeHistogram degreeHistogram(const rdf::RdfGraph& graph) {
  return fromDegrees(rdfDegrees(graph), graph.size());
}

DegreeHistogram degreeHistogram(const model::SpgGraph& graph) {
  return fromDegrees(spgDegrees(graph), graph.edgeCount());
}

std::optional<rdf::Term> maxDegreeTerm(const rdf::RdfGraph& graph) {
  std::optional<rdf::TermId> best;
  std::size_t bestDegree = 0;
  std::string bestForm;
  for (const auto& [id, degree] : rdfDegrees(graph)) {
    if (best && degree < bestDegree) continue;
    std::string form = graph.term(id).toNTriples();
    if (!best || degree > bestDegree || form < bestForm) {
      best = id;
      bestDegree = degree;
      bestForm = std::move(form);
    }
  }
  if (!best) return std::nullopt;
  return graph.term(*best);
}

std::optional<std::string> maxDegreeNode(const model::SpgGraph& graph) {
  std::optional<std::string> best;
  std::size_t bestDegree = 0;
  for (const auto& [id, degree] : spgDegrees(graph)) {
    if (!best || degree > bestDegree) {
      best = id;
      bestDegree = degree;
    }
  }
  return best;
}

std::string CompactionMetrics::toKeyValue() const {
  auto ratio = [](const std::optional<double>& r) {
    return r ? model::formatReal(*r) : std::string("none");
  };
  std::ostringstream out;
  out << "rdf_nodes=" << rdfNodes << '\n'
      << "rdf_triples=" << rdfTriples << '\n'
      << "spg_nodes=" << spgNodes << '\n'
      << "spg_edges=" << spgEdges << '\n'
      << "node_ratio=" << ratio(nodeRatio) << '\n'
      << "edge_ratio=" << ratio(edgeRatio) << '\n';
  return out.str();
}

std::string CompactionMetrics::toJson() const {
  nlohmann::ordered_json doc;
  doc["rdf_nodes"] = rdfNodes;
  doc["rdf_triples"] = rdfTriples;
  doc["spg_nodes"] = spgNodes;
  doc["spg_edges"] = spgEdges;
  doc["node_ratio"] = nodeRatio ? nlohmann::ordered_json(*nodeRatio) : nlohmann::ordered_json();
  doc["edge_ratio"] = edgeRatio ? nlohmann::ordered_json(*edgeRatio) : nlohmann::ordered_json();
  return doc.dump(2) + "\n";
}

CompactionMetrics compactionMetrics(const rdf::RdfGraph& graph, const model::SpgGraph& spg) {
  CompactionMetrics m;
  m.rdfNodes = rdfDegrees(graph).size();
  m.rdfTriples = graph.size();
  m.spgNodes = spg.nodeCount();
  m.spgEdges = spg.edgeCount();
  if (m.spgNodes > 0) m.nodeRatio = static_cast<double>(m.rdfNodes) / static_cast<double>(m.spgNodes);
  if (m.spgEdges > 0) m.edgeRatio = static_cast<double>(m.rdfTriples) / static_cast<double>(m.spgEdges);
  return m;
}

bool hasVariables(const rdf::RdfGraph& pattern) {
  for (rdf::TermId id = 0; id < pattern.dictionary().size(); ++id) {
    const rdf::Term& t = pattern.term(id);
    if (t.isIri() && t.value().starts_with(rdf::kVariableNamespace)) return true;
  }
  return false;
}

projector::ProjectionResult compactQuery(const rdf::RdfGraph& pattern,
                                         projector::ProjectionConfig config) {
  config.variableNamespace = std::string(rdf::kVariableNamespace);
  return projector::project(pattern, config);
}

}  // namespace spg::analytics
