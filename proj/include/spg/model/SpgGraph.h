#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "spg/model/PropertyValue.h"

namespace spg::model {

inline constexpr const char* kDefaultLabel = "Thing";

struct SpgNode {
  std::string id;
  std::string label = kDefaultLabel;
  std::set<std::string> types;
  PropertyMap properties;

  friend bool operator==(const SpgNode&, const SpgNode&) = default;
};

struct SpgEdge {
  std::string id;
  std::string source;
  std::string target;
  std::string label;
  PropertyMap properties;

  friend bool operator==(const SpgEdge&, const SpgEdge&) = default;
};

// Canonical edge order: (source, target, label, id).
bool canonicalEdgeLess(const SpgEdge& a, const SpgEdge& b);

class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Property-graph projection. Nodes are kept ordered by id; edges are ordered
// canonically after canonicalize().
class SpgGraph {
 public:
  // Returns the node with this id, creating a "Thing" node when absent.
  SpgNode& upsertNode(const std::string& id);
  const SpgNode* findNode(const std::string& id) const;
  SpgNode* findNode(const std::string& id);
  bool hasNode(const std::string& id) const { return nodes_.contains(id); }

  // Throws IntegrityError when the id is already taken.
  void addEdge(SpgEdge edge);
  bool hasEdge(const std::string& id) const { return edgeIds_.contains(id); }

  const std::map<std::string, SpgNode>& nodes() const { return nodes_; }
  const std::vector<SpgEdge>& edges() const { return edges_; }
  std::vector<SpgEdge>& mutableEdges() { return edges_; }
  std::size_t nodeCount() const { return nodes_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }
  bool empty() const { return nodes_.empty() && edges_.empty(); }

  void canonicalize();
  // Throws IntegrityError on a dangling edge endpoint or a node label that is
  // not among its types.
  void checkIntegrity() const;

  friend bool operator==(const SpgGraph& a, const SpgGraph& b);

 private:
  std::map<std::string, SpgNode> nodes_;
  std::vector<SpgEdge> edges_;
  std::unordered_set<std::string> edgeIds_;
};

// Compares nodes (id, label, properties) and the multiset of edges by
// (source, target, label, properties), ignoring edge ids and node type sets.
bool sameStructure(const SpgGraph& a, const SpgGraph& b);

}  // namespace spg::model
