#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "spg/rdf/Term.h"

namespace spg::model {

// Key/value payload of nodes and edges.
class PropertyValue {
 public:
  enum class Kind { Text, Integer, Real, Boolean };

  PropertyValue() : value_(std::string()) {}
  static PropertyValue text(std::string value) { return PropertyValue(std::move(value)); }
  static PropertyValue integer(std::int64_t value) { return PropertyValue(value); }
  static PropertyValue real(double value) { return PropertyValue(value); }
  static PropertyValue boolean(bool value) { return PropertyValue(value); }

  // Maps a literal by datatype: xsd integer types to Integer, double, float
  // and decimal to Real, boolean to Boolean, anything else (including
  // lexical forms that do not parse) to Text of the lexical form.
  static PropertyValue fromLiteral(const rdf::Term& literal);

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool isText() const { return kind() == Kind::Text; }
  const std::string& asText() const { return std::get<std::string>(value_); }
  std::int64_t asInteger() const { return std::get<std::int64_t>(value_); }
  double asReal() const { return std::get<double>(value_); }
  bool asBoolean() const { return std::get<bool>(value_); }

  // Lexical form: decimal integers, shortest round-trip reals (always with a
  // '.' or exponent), `true`/`false`, or the text itself.
  std::string toString() const;

  // Literal with the inverse datatype mapping (Text becomes xsd:string).
  rdf::Term toLiteral() const;

  friend bool operator==(const PropertyValue&, const PropertyValue&) = default;

 private:
  explicit PropertyValue(std::string v) : value_(std::move(v)) {}
  explicit PropertyValue(std::int64_t v) : value_(v) {}
  explicit PropertyValue(double v) : value_(v) {}
  explicit PropertyValue(bool v) : value_(v) {}

  std::variant<std::string, std::int64_t, double, bool> value_;
};

const char* kindName(PropertyValue::Kind kind);

using PropertyMap = std::map<std::string, PropertyValue>;

std::string formatReal(double value);

// Datatype IRI → value kind, for the datatypes the mapping covers.
bool isIntegerDatatype(const std::string& datatype);
bool isRealDatatype(const std::string& datatype);

}  // namespace spg::model
