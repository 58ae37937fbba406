#include "spg/model/PropertyValue.h"

#include <charconv>
#include <cmath>
#include <string_view>

#include "spg/rdf/Vocabulary.h"

namespace spg::model {

namespace {

std::string_view stripPlus(std::string_view s) {
  return s.starts_with('+') ? s.substr(1) : s;
}

template <typename T>
bool parseWhole(std::string_view text, T& out) {
  text = stripPlus(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parseXsdReal(std::string_view text, double& out) {
  if (text == "INF" || text == "+INF") {
    out = HUGE_VAL;
    return true;
  }
  if (text == "-INF") {
    out = -HUGE_VAL;
    return true;
  }
  if (text == "NaN") {
    out = std::nan("");
    return true;
  }
  // from_chars also accepts "inf"/"nan" spellings that XSD does not.
  for (char c : text) {
    if (c == 'i' || c == 'I' || c == 'n' || c == 'N') return false;
  }
  return parseWhole(text, out);
}

}  // namespace

bool isIntegerDatatype(const std::string& datatype) {
  static const std::string kNames[] = {
      "integer",         "long",           "int",          "short",
      "byte",            "nonNegativeInteger", "positiveInteger", "negativeInteger",
      "nonPositiveInteger", "unsignedLong", "unsignedInt",  "unsignedShort",
      "unsignedByte"};
  if (!datatype.starts_with(rdf::ns::kXsd)) return false;
  std::string_view local = std::string_view(datatype).substr(rdf::ns::kXsd.size());
  for (const auto& name : kNames) {
    if (local == name) return true;
  }
  return false;
}

bool isRealDatatype(const std::string& datatype) {
  return datatype == rdf::xsd::kDouble || datatype == rdf::xsd::kFloat ||
         datatype == rdf::xsd::kDecimal;
}

PropertyValue PropertyValue::fromLiteral(const rdf::Term& literal) {
  const std::string& lexical = literal.value();
  const std::string& datatype = literal.datatype();
  if (isIntegerDatatype(datatype)) {
    std::int64_t value;
    if (parseWhole(lexical, value)) return integer(value);
  } else if (isRealDatatype(datatype)) {
    double value;
    if (parseXsdReal(lexical, value)) return real(value);
  } else if (datatype == rdf::xsd::kBoolean) {
    if (lexical == "true" || lexical == "1") return boolean(true);
    if (lexical == "false" || lexical == "0") return boolean(false);
  }
  return text(lexical);
}

std::string formatReal(double value) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value > 0 ? "INF" : "-INF";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, ptr);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::string PropertyValue::toString() const {
  switch (kind()) {
    case Kind::Text: return asText();
    case Kind::Integer: return std::to_string(asInteger());
    case Kind::Real: return formatReal(asReal());
    case Kind::Boolean: return asBoolean() ? "true" : "false";
  }
  return {};
}

rdf::Term PropertyValue::toLiteral() const {
  switch (kind()) {
    case Kind::Text: return rdf::Term::literal(asText());
    case Kind::Integer: return rdf::Term::literal(toString(), rdf::xsd::kInteger);
    case Kind::Real: return rdf::Term::literal(toString(), rdf::xsd::kDouble);
    case Kind::Boolean: return rdf::Term::literal(toString(), rdf::xsd::kBoolean);
  }
  return rdf::Term::literal(toString());
}

const char* kindName(PropertyValue::Kind kind) {
  switch (kind) {
    case PropertyValue::Kind::Text: return "Text";
    case PropertyValue::Kind::Integer: return "Integer";
    case PropertyValue::Kind::Real: return "Real";
    case PropertyValue::Kind::Boolean: return "Boolean";
  }
  return "?";
}

}  // namespace spg::model
