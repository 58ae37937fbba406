#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spg/rdf/RdfGraph.h"

namespace spg::ontology {

struct PropertyDecl {
  std::optional<std::string> domain;
  std::optional<std::string> range;

  friend bool operator==(const PropertyDecl&, const PropertyDecl&) = default;
};

// RDFS-subset schema: classes with a subclass hierarchy, properties with an
// optional domain and range.
class OntologySchema {
 public:
  void addClass(const std::string& iri);
  void addSubclass(const std::string& sub, const std::string& super);
  PropertyDecl& addProperty(const std::string& iri);
  void addSubproperty(const std::string& sub, const std::string& super);
  void addDatatype(const std::string& iri);
  void countSkipped(std::size_t n = 1) { skipped_ += n; }

  const std::set<std::string>& classes() const { return classes_; }
  const std::map<std::string, PropertyDecl>& properties() const { return properties_; }
  const std::map<std::string, std::set<std::string>>& subclassOf() const { return subclassOf_; }
  const std::map<std::string, std::set<std::string>>& subpropertyOf() const {
    return subpropertyOf_;
  }
  std::size_t skippedTriples() const { return skipped_; }
  bool empty() const { return classes_.empty() && properties_.empty() && subclassOf_.empty(); }

  // Reflexive-transitive closure of subclass-of starting at `cls`. Unknown
  // classes yield {cls}; cycles are followed once.
  std::set<std::string> superclassClosure(const std::string& cls) const;

  // XSD and RDF literal datatypes, plus anything declared rdfs:Datatype.
  bool isDatatype(const std::string& iri) const;

  // Declared classes / properties whose local name equals `name`.
  std::vector<std::string> classesNamed(const std::string& name) const;
  std::vector<std::string> propertiesNamed(const std::string& name) const;

 private:
  std::set<std::string> classes_;
  std::map<std::string, std::set<std::string>> subclassOf_;
  std::map<std::string, PropertyDecl> properties_;
  std::map<std::string, std::set<std::string>> subpropertyOf_;
  std::set<std::string> datatypes_;
  std::multimap<std::string, std::string> classByLocalName_;
  std::multimap<std::string, std::string> propertyByLocalName_;
  std::size_t skipped_ = 0;
};

// Extracts the schema from an ontology graph. Triples outside the supported
// subset are counted in skippedTriples().
OntologySchema loadOntology(const rdf::RdfGraph& graph);

}  // namespace spg::ontology
