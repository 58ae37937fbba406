#include "spg/projector/Reifier.h"

#include <algorithm>

#include "spg/rdf/Parsers.h"
#include "spg/util/Fnv.h"

namespace spg::projector {

namespace {

bool isDirectEdgeId(const model::SpgEdge& edge, const std::string& predicate) {
  std::string prefix = edge.source + "|" + predicate + "|" + edge.target + "|";
  if (!edge.id.starts_with(prefix) || edge.id.size() == prefix.size()) return false;
  return std::all_of(edge.id.begin() + static_cast<std::ptrdiff_t>(prefix.size()), edge.id.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

ReifyConfig ReifyConfig::fromGraph(const rdf::RdfGraph& source,
                                   const rdf::ReificationVocabulary& vocabulary) {
  ReifyConfig config;
  config.vocabulary = vocabulary;
  for (const auto& t : source.triples()) {
    config.iriForName.try_emplace(rdf::localName(t.predicate.value()), t.predicate.value());
    bool namesIri = t.predicate.value() == vocabulary.type || t.predicate.value() == vocabulary.predicate;
    if (namesIri && t.object.isIri()) {
      config.iriForName.try_emplace(rdf::localName(t.object.value()), t.object.value());
    }
  }
  return config;
}

std::string ReifyConfig::iriFor(const std::string& name) const {
  if (name.starts_with("?")) return variableNamespace + name.substr(1);
  auto it = iriForName.find(name);
  if (it != iriForName.end()) return it->second;
  if (rdf::isAbsoluteIri(name)) return name;
  return defaultNamespace + name;
}

rdf::Term termForId(const std::string& id, const ReifyConfig& config) {
  if (id.starts_with("?")) return rdf::Term::iri(config.variableNamespace + id.substr(1));
  if (id.find(':') != std::string::npos) return rdf::Term::iri(id);
  if (rdf::isValidBlankLabel(id)) return rdf::Term::blank(id);
  return rdf::Term::iri(config.defaultNamespace + "node/" + util::fnv1a32Hex(id));
}

rdf::RdfGraph reify(const model::SpgGraph& graph, const ReifyConfig& config) {
  const auto& v = config.vocabulary;
  rdf::RdfGraph out;
  const rdf::Term type = rdf::Term::iri(v.type);

  auto addStatement = [&](const rdf::Term& node, const rdf::Term& s, const rdf::Term& p,
                          const rdf::Term& o) {
    out.add({node, type, rdf::Term::iri(v.statement)});
    out.add({node, rdf::Term::iri(v.subject), s});
    out.add({node, rdf::Term::iri(v.predicate), p});
    out.add({node, rdf::Term::iri(v.object), o});
  };

  for (const auto& [id, node] : graph.nodes()) {
    rdf::Term subject = termForId(id, config);
    std::set<std::string> types = node.types;
    if (types.empty() && node.label != model::kDefaultLabel) types.insert(node.label);
    for (const auto& t : types) {
      std::string iri = t == "Statement" ? v.statement : config.iriFor(t);
      out.add({subject, type, rdf::Term::iri(iri)});
    }
    for (const auto& [key, value] : node.properties) {
      auto dot = key.find('.');
      if (dot == std::string::npos) {
        out.add({subject, rdf::Term::iri(config.iriFor(key)), value.toLiteral()});
        continue;
      }
      std::string base = key.substr(0, dot);
      auto owner = node.properties.find(base);
      if (owner == node.properties.end()) {
        out.add({subject, rdf::Term::iri(config.iriFor(key)), value.toLiteral()});
        continue;
      }
      rdf::Term predicate = rdf::Term::iri(config.iriFor(base));
      rdf::Term object = owner->second.toLiteral();
      rdf::Term statement = rdf::Term::iri(
          config.defaultNamespace + "statement/" +
          util::fnv1a32Hex(subject.toNTriples() + predicate.toNTriples() + object.toNTriples()));
      addStatement(statement, subject, predicate, object);
      out.add({statement, rdf::Term::iri(config.iriFor(key.substr(dot + 1))), value.toLiteral()});
    }
  }

  for (const auto& edge : graph.edges()) {
    rdf::Term s = termForId(edge.source, config);
    rdf::Term o = termForId(edge.target, config);
    std::string predicateIri = config.iriFor(edge.label);
    rdf::Term p = rdf::Term::iri(predicateIri);
    if (edge.properties.empty() && isDirectEdgeId(edge, predicateIri)) {
      out.add({s, p, o});
      continue;
    }
    rdf::Term statement = edge.id.find(':') != std::string::npos || rdf::isValidBlankLabel(edge.id)
                              ? termForId(edge.id, config)
                              : rdf::Term::iri(config.defaultNamespace + "statement/" +
                                               util::fnv1a32Hex(edge.id));
    addStatement(statement, s, p, o);
    for (const auto& [key, value] : edge.properties) {
      out.add({statement, rdf::Term::iri(config.iriFor(key)), value.toLiteral()});
    }
  }
  return out;
}

}  // namespace spg::projector
