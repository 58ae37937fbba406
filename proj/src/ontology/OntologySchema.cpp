#include "spg/ontology/OntologySchema.h"

#include <deque>

#include "spg/rdf/Parsers.h"
#include "spg/rdf/Vocabulary.h"

namespace spg::ontology {

void OntologySchema::addClass(const std::string& iri) {
  if (classes_.insert(iri).second) classByLocalName_.emplace(rdf::localName(iri), iri);
}

void OntologySchema::addSubclass(const std::string& sub, const std::string& super) {
  subclassOf_[sub].insert(super);
}

PropertyDecl& OntologySchema::addProperty(const std::string& iri) {
  auto [it, inserted] = properties_.try_emplace(iri);
  if (inserted) propertyByLocalName_.emplace(rdf::localName(iri), iri);
  return it->second;
}

void OntologySchema::addSubproperty(const std::string& sub, const std::string& super) {
  subpropertyOf_[sub].insert(super);
}

void OntologySchema::addDatatype(const std::string& iri) { datatypes_.insert(iri); }

std::set<std::string> OntologySchema::superclassClosure(const std::string& cls) const {
  std::set<std::string> closure{cls};
  std::deque<std::string> frontier{cls};
  while (!frontier.empty()) {
    std::string current = std::move(frontier.front());
    frontier.pop_front();
    auto it = subclassOf_.find(current);
    if (it == subclassOf_.end()) continue;
    for (const auto& super : it->second) {
      if (closure.insert(super).second) frontier.push_back(super);
    }
  }
  return closure;
}

bool OntologySchema::isDatatype(const std::string& iri) const {
  return iri.starts_with(rdf::ns::kXsd) || iri == rdf::rdfs::kLiteral ||
         iri == rdf::rdf::kLangString || datatypes_.contains(iri);
}

std::vector<std::string> OntologySchema::classesNamed(const std::string& name) const {
  std::vector<std::string> out;
  auto [first, last] = classByLocalName_.equal_range(name);
  for (auto it = first; it != last; ++it) out.push_back(it->second);
  return out;
}

std::vector<std::string> OntologySchema::propertiesNamed(const std::string& name) const {
  std::vector<std::string> out;
  auto [first, last] = propertyByLocalName_.equal_range(name);
  for (auto it = first; it != last; ++it) out.push_back(it->second);
  return out;
}

OntologySchema loadOntology(const rdf::RdfGraph& graph) {
  OntologySchema schema;
  // Sorted so that "first declaration wins" is independent of file order.
  std::set<rdf::Triple> triples = graph.tripleSet();
  for (const auto& t : triples) {
    if (!t.subject.isIri() || !t.object.isIri()) {
      schema.countSkipped();
      continue;
    }
    const std::string& s = t.subject.value();
    const std::string& p = t.predicate.value();
    const std::string& o = t.object.value();
    if (p == rdf::rdf::kType) {
      if (o == rdf::rdfs::kClass || o == rdf::owl::kClass) {
        schema.addClass(s);
      } else if (o == rdf::rdf::kProperty || o == rdf::owl::kObjectProperty ||
                 o == rdf::owl::kDatatypeProperty) {
        schema.addProperty(s);
      } else if (o == rdf::rdfs::kDatatype) {
        schema.addDatatype(s);
      } else {
        schema.countSkipped();
      }
    } else if (p == rdf::rdfs::kSubClassOf) {
      schema.addSubclass(s, o);
    } else if (p == rdf::rdfs::kSubPropertyOf) {
      schema.addSubproperty(s, o);
    } else if (p == rdf::rdfs::kDomain || p == rdf::rdfs::kRange) {
      PropertyDecl& decl = schema.addProperty(s);
      std::optional<std::string>& slot = p == rdf::rdfs::kDomain ? decl.domain : decl.range;
      if (slot) {
        schema.countSkipped();
      } else {
        slot = o;
      }
    } else {
      schema.countSkipped();
    }
  }
  return schema;
}

}  // namespace spg::ontology
