#include "spg/ontology/Validator.h"

#include <optional>
#include <sstream>

#include "json.hpp"

#include "spg/rdf/Vocabulary.h"

namespace spg::ontology {

namespace {

using model::PropertyValue;

std::optional<PropertyValue::Kind> expectedKind(const std::string& datatype) {
  using namespace rdf::xsd;
  if (datatype == kString) return PropertyValue::Kind::Text;
  if (datatype == kInteger || datatype == kLong || datatype == kInt || datatype == kShort) {
    return PropertyValue::Kind::Integer;
  }
  if (datatype == kDouble || datatype == kFloat || datatype == kDecimal) {
    return PropertyValue::Kind::Real;
  }
  if (datatype == kBoolean) return PropertyValue::Kind::Boolean;
  return std::nullopt;
}

class Checker {
 public:
  Checker(const model::SpgGraph& graph, const OntologySchema& schema, ValidationReport& report)
      : graph_(graph), schema_(schema), report_(report) {}

  void run() {
    for (const auto& [id, node] : graph_.nodes()) checkNode(node);
    for (const auto& edge : graph_.edges()) checkEdge(edge);
  }

 private:
  bool isUntyped(const std::string& label) const { return label == model::kDefaultLabel; }

  std::set<std::string> closureOf(const std::string& label) {
    auto cached = closures_.find(label);
    if (cached != closures_.end()) return cached->second;
    std::set<std::string> out;
    auto candidates = schema_.classesNamed(label);
    if (candidates.size() > 1) {
      report_.note("class name '" + label + "' matches " + std::to_string(candidates.size()) +
                   " ontology classes; any candidate may satisfy a check");
    }
    for (const auto& cls : candidates) out.merge(schema_.superclassClosure(cls));
    closures_.emplace(label, out);
    return out;
  }

  std::vector<std::string> propertiesNamed(const std::string& name) {
    auto candidates = schema_.propertiesNamed(name);
    if (candidates.size() > 1 && warnedProperties_.insert(name).second) {
      report_.note("property name '" + name + "' matches " + std::to_string(candidates.size()) +
                   " ontology properties; any candidate may satisfy a check");
    }
    return candidates;
  }

  bool domainHolds(const std::vector<std::string>& candidates, const std::string& ownerLabel) {
    std::set<std::string> closure = closureOf(ownerLabel);
    for (const auto& p : candidates) {
      const auto& decl = schema_.properties().at(p);
      if (!decl.domain || closure.contains(*decl.domain)) return true;
    }
    return false;
  }

  void checkNode(const model::SpgNode& node) {
    if (!isUntyped(node.label) && schema_.classesNamed(node.label).empty()) {
      report_.add(ViolationCode::UnknownLabel, node.id,
                  "label '" + node.label + "' is not a declared class");
    }
    for (const auto& [key, value] : node.properties) {
      checkProperty(node.id, key, value, &node.label);
    }
  }

  void checkEdge(const model::SpgEdge& edge) {
    auto candidates = propertiesNamed(edge.label);
    if (candidates.empty()) {
      report_.add(ViolationCode::UnknownEdgeType, edge.id,
                  "edge label '" + edge.label + "' is not a declared property");
    } else {
      const model::SpgNode* source = graph_.findNode(edge.source);
      const model::SpgNode* target = graph_.findNode(edge.target);
      if (source && !isUntyped(source->label) && !domainHolds(candidates, source->label)) {
        report_.add(ViolationCode::DomainViolation, edge.id,
                    "source '" + edge.source + "' labelled '" + source->label +
                        "' is outside the domain of '" + edge.label + "'");
      }
      if (target && !rangeHoldsForResource(candidates, target->label)) {
        report_.add(ViolationCode::RangeViolation, edge.id,
                    "target '" + edge.target + "' labelled '" + target->label +
                        "' is outside the range of '" + edge.label + "'");
      }
    }
    for (const auto& [key, value] : edge.properties) checkProperty(edge.id, key, value, nullptr);
  }

  bool rangeHoldsForResource(const std::vector<std::string>& candidates,
                             const std::string& targetLabel) {
    for (const auto& p : candidates) {
      const auto& decl = schema_.properties().at(p);
      if (!decl.range) return true;
      if (schema_.isDatatype(*decl.range)) continue;
      if (isUntyped(targetLabel) || closureOf(targetLabel).contains(*decl.range)) return true;
    }
    return false;
  }

  // `ownerLabel` is null for edge properties, which have no domain to check.
  void checkProperty(const std::string& element, const std::string& key, const PropertyValue& value,
                     const std::string* ownerLabel) {
    // Keys of literal statements carry a `predicate.qualifier` form; the
    // qualifier names the property.
    auto dot = key.rfind('.');
    std::string name = dot == std::string::npos ? key : key.substr(dot + 1);
    auto candidates = propertiesNamed(name);
    if (candidates.empty()) return;

    if (ownerLabel && !isUntyped(*ownerLabel) && !domainHolds(candidates, *ownerLabel)) {
      report_.add(ViolationCode::DomainViolation, element,
                  "property '" + key + "' is outside the domain of label '" + *ownerLabel + "'");
    }

    bool sawDatatype = false;
    for (const auto& p : candidates) {
      const auto& decl = schema_.properties().at(p);
      if (!decl.range) return;
      if (!schema_.isDatatype(*decl.range)) continue;
      sawDatatype = true;
      auto expected = expectedKind(*decl.range);
      if (!expected) {
        report_.note("datatype check skipped for '" + key + "' on '" + element +
                     "': unsupported datatype <" + *decl.range + ">");
        return;
      }
      if (*expected == value.kind()) return;
    }
    if (sawDatatype) {
      report_.add(ViolationCode::DatatypeMismatch, element,
                  "property '" + key + "' holds " + model::kindName(value.kind()) +
                      " value '" + value.toString() + "' but its range is a different datatype");
    } else {
      report_.add(ViolationCode::RangeViolation, element,
                  "property '" + key + "' holds a literal but its range is a class");
    }
  }

  const model::SpgGraph& graph_;
  const OntologySchema& schema_;
  ValidationReport& report_;
  std::map<std::string, std::set<std::string>> closures_;
  std::set<std::string> warnedProperties_;
};

}  // namespace

const char* codeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::UnknownLabel: return "UnknownLabel";
    case ViolationCode::UnknownEdgeType: return "UnknownEdgeType";
    case ViolationCode::DomainViolation: return "DomainViolation";
    case ViolationCode::RangeViolation: return "RangeViolation";
    case ViolationCode::DatatypeMismatch: return "DatatypeMismatch";
  }
  return "?";
}

void ValidationReport::add(ViolationCode code, std::string element, std::string detail) {
  violations_.push_back({code, std::move(element), std::move(detail)});
  ++counts_[code];
}

std::size_t ValidationReport::count(ViolationCode code) const {
  auto it = counts_.find(code);
  return it == counts_.end() ? 0 : it->second;
}

std::string ValidationReport::toText() const {
  std::string out;
  for (const auto& v : violations_) {
    out += codeName(v.code);
    out += '\t';
    out += v.element;
    out += '\t';
    out += v.detail;
    out += '\n';
  }
  return out;
}

std::string ValidationReport::toJson() const {
  nlohmann::json doc;
  doc["passed"] = passed();
  doc["mode"] = mode_ == ValidationMode::Strict ? "strict" : "lenient";
  doc["violations"] = nlohmann::json::array();
  for (const auto& v : violations_) {
    doc["violations"].push_back({{"code", codeName(v.code)}, {"element", v.element}, {"detail", v.detail}});
  }
  doc["counts"] = nlohmann::json::object();
  for (const auto& [code, n] : counts_) doc["counts"][codeName(code)] = n;
  doc["notes"] = notes_;
  return doc.dump(2) + "\n";
}

ValidationReport validateGraph(const model::SpgGraph& graph, const OntologySchema& schema,
                               ValidationMode mode) {
  ValidationReport report(mode);
  Checker(graph, schema, report).run();
  return report;
}

}  // namespace spg::ontology
