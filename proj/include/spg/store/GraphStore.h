#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spg/rdf/RdfGraph.h"
#include "spg/store/TriplePattern.h"

namespace spg::store {

enum class LoadMode { Replace, Merge };

class UnknownGraphError : public std::out_of_range {
 public:
  explicit UnknownGraphError(const std::string& name)
      : std::out_of_range("unknown named graph '" + name + "'"), name_(name) {}
  const std::string& graphName() const { return name_; }

 private:
  std::string name_;
};

// Result of a basic graph pattern match. Rows are distinct and sorted by their
// serialized binding tuple.
struct BindingTable {
  std::vector<std::string> variables;
  std::vector<std::vector<rdf::Term>> rows;

  std::optional<std::size_t> column(const std::string& variable) const;
  // Tab-separated, header line first, terms in N-Triples form.
  std::string toTsv() const;

  friend bool operator==(const BindingTable&, const BindingTable&) = default;
};

// Named-graph storage and query. Only an in-memory implementation ships; the
// interface is what a remote backend would implement.
class GraphStore {
 public:
  virtual ~GraphStore() = default;

  virtual void load(rdf::RdfGraph graph, const std::string& name, LoadMode mode) = 0;
  virtual bool drop(const std::string& name) = 0;
  virtual bool contains(const std::string& name) const = 0;
  virtual std::vector<std::string> graphNames() const = 0;
  virtual std::size_t tripleCount(const std::string& name) const = 0;

  // Shared, immutable view of a loaded graph.
  virtual std::shared_ptr<const rdf::RdfGraph> snapshot(const std::string& name) const = 0;

  // Conjunctive match of `patterns`. Throws UnknownGraphError, and
  // std::invalid_argument for an empty or malformed pattern list.
  virtual BindingTable match(const std::string& name,
                             std::span<const TriplePattern> patterns) const = 0;
};

}  // namespace spg::store
