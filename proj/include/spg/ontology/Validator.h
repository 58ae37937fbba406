#pragma once

#include <map>
#include <string>
#include <vector>

#include "spg/model/SpgGraph.h"
#include "spg/ontology/OntologySchema.h"

namespace spg::ontology {

enum class ViolationCode { UnknownLabel, UnknownEdgeType, DomainViolation, RangeViolation, DatatypeMismatch };

const char* codeName(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string element;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class ValidationMode { Strict, Lenient };

class ValidationReport {
 public:
  explicit ValidationReport(ValidationMode mode = ValidationMode::Strict) : mode_(mode) {}

  void add(ViolationCode code, std::string element, std::string detail);
  void note(std::string message) { notes_.push_back(std::move(message)); }

  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t count(ViolationCode code) const;
  const std::map<ViolationCode, std::size_t>& counts() const { return counts_; }
  bool passed() const { return violations_.empty(); }
  ValidationMode mode() const { return mode_; }
  // Only strict mode turns violations into a pipeline failure.
  bool failsPipeline() const { return mode_ == ValidationMode::Strict && !passed(); }

  // `CODE<TAB>element<TAB>detail`, one violation per line.
  std::string toText() const;
  // JSON document with violations, counts and notes.
  std::string toJson() const;

 private:
  ValidationMode mode_;
  std::vector<Violation> violations_;
  std::map<ViolationCode, std::size_t> counts_;
  std::vector<std::string> notes_;
};

// Checks node labels, edge types, domains, ranges and property datatypes.
// Labels and keys are matched to schema IRIs by local name; when several IRIs
// share a local name each is tried and the check passes if any candidate does.
// Endpoints labelled "Thing" carry no type to check and skip domain/range.
ValidationReport validateGraph(const model::SpgGraph& graph, const OntologySchema& schema,
                               ValidationMode mode = ValidationMode::Strict);

}  // namespace spg::ontology
