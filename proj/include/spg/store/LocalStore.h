#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "spg/store/GraphStore.h"

namespace spg::store {

// A graph plus its triples sorted in SPO, POS and OSP order. Every combination
// of bound positions is a prefix of one of the three orders.
class IndexedGraph {
 public:
  enum class Order { Spo, Pos, Osp };

  explicit IndexedGraph(std::shared_ptr<const rdf::RdfGraph> graph);

  const rdf::RdfGraph& graph() const { return *graph_; }
  std::shared_ptr<const rdf::RdfGraph> shared() const { return graph_; }
  std::span<const rdf::EncodedTriple> index(Order order) const {
    return indices_[static_cast<std::size_t>(order)];
  }

  // Triples matching the bound positions, in the order of the chosen index.
  std::span<const rdf::EncodedTriple> lookup(std::optional<rdf::TermId> subject,
                                             std::optional<rdf::TermId> predicate,
                                             std::optional<rdf::TermId> object) const;

 private:
  std::shared_ptr<const rdf::RdfGraph> graph_;
  std::array<std::vector<rdf::EncodedTriple>, 3> indices_;
};

// In-memory transient store. Loading is single-writer; once loaded, a graph is
// immutable and may be read concurrently.
class LocalStore final : public GraphStore {
 public:
  void load(rdf::RdfGraph graph, const std::string& name, LoadMode mode) override;
  bool drop(const std::string& name) override;
  bool contains(const std::string& name) const override;
  std::vector<std::string> graphNames() const override;
  std::size_t tripleCount(const std::string& name) const override;
  std::shared_ptr<const rdf::RdfGraph> snapshot(const std::string& name) const override;
  BindingTable match(const std::string& name,
                     std::span<const TriplePattern> patterns) const override;

  const IndexedGraph& indexed(const std::string& name) const;

  // Triples matching the given terms; unset positions are wildcards.
  std::vector<rdf::Triple> find(const std::string& name,
                                const std::optional<rdf::Term>& subject,
                                const std::optional<rdf::Term>& predicate,
                                const std::optional<rdf::Term>& object) const;

 private:
  std::map<std::string, std::unique_ptr<IndexedGraph>> graphs_;
};

}  // namespace spg::store
