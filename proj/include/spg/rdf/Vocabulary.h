#pragma once

#include <string>
#include <string_view>

namespace spg::rdf {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
}  // namespace ns

namespace rdf {
inline const std::string kType = std::string(ns::kRdf) + "type";
inline const std::string kStatement = std::string(ns::kRdf) + "Statement";
inline const std::string kSubject = std::string(ns::kRdf) + "subject";
inline const std::string kPredicate = std::string(ns::kRdf) + "predicate";
inline const std::string kObject = std::string(ns::kRdf) + "object";
inline const std::string kProperty = std::string(ns::kRdf) + "Property";
inline const std::string kLangString = std::string(ns::kRdf) + "langString";
}  // namespace rdf

namespace rdfs {
inline const std::string kClass = std::string(ns::kRdfs) + "Class";
inline const std::string kSubClassOf = std::string(ns::kRdfs) + "subClassOf";
inline const std::string kSubPropertyOf = std::string(ns::kRdfs) + "subPropertyOf";
inline const std::string kDomain = std::string(ns::kRdfs) + "domain";
inline const std::string kRange = std::string(ns::kRdfs) + "range";
inline const std::string kDatatype = std::string(ns::kRdfs) + "Datatype";
inline const std::string kLiteral = std::string(ns::kRdfs) + "Literal";
}  // namespace rdfs

namespace xsd {
inline const std::string kString = std::string(ns::kXsd) + "string";
inline const std::string kBoolean = std::string(ns::kXsd) + "boolean";
inline const std::string kInteger = std::string(ns::kXsd) + "integer";
inline const std::string kDecimal = std::string(ns::kXsd) + "decimal";
inline const std::string kDouble = std::string(ns::kXsd) + "double";
inline const std::string kFloat = std::string(ns::kXsd) + "float";
inline const std::string kLong = std::string(ns::kXsd) + "long";
inline const std::string kInt = std::string(ns::kXsd) + "int";
inline const std::string kShort = std::string(ns::kXsd) + "short";
}  // namespace xsd

namespace owl {
inline const std::string kClass = std::string(ns::kOwl) + "Class";
inline const std::string kObjectProperty = std::string(ns::kOwl) + "ObjectProperty";
inline const std::string kDatatypeProperty = std::string(ns::kOwl) + "DatatypeProperty";
}  // namespace owl

// The IRIs that make up the reification pattern. Defaults to the standard RDF
// vocabulary; overridable so other dialects can reuse the projector.
struct ReificationVocabulary {
  std::string type = rdf::kType;
  std::string statement = rdf::kStatement;
  std::string subject = rdf::kSubject;
  std::string predicate = rdf::kPredicate;
  std::string object = rdf::kObject;

  static ReificationVocabulary standard() { return {}; }

  // Throws std::invalid_argument unless all five are distinct absolute IRIs.
  void validate() const;

  friend bool operator==(const ReificationVocabulary&,
                         const ReificationVocabulary&) = default;
};

}  // namespace spg::rdf
