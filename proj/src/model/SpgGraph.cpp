#include "spg/model/SpgGraph.h"

#include <algorithm>
#include <tuple>

#include "spg/model/Diagnostics.h"

namespace spg::model {

bool canonicalEdgeLess(const SpgEdge& a, const SpgEdge& b) {
  return std::tie(a.source, a.target, a.label, a.id) <
         std::tie(b.source, b.target, b.label, b.id);
}

SpgNode& SpgGraph::upsertNode(const std::string& id) {
  auto [it, inserted] = nodes_.try_emplace(id);
  if (inserted) it->second.id = id;
  return it->second;
}

const SpgNode* SpgGraph::findNode(const std::string& id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

SpgNode* SpgGraph::findNode(const std::string& id) {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

void SpgGraph::addEdge(SpgEdge edge) {
  if (!edgeIds_.insert(edge.id).second) {
    throw IntegrityError("duplicate edge id '" + edge.id + "'");
  }
  edges_.push_back(std::move(edge));
}

void SpgGraph::canonicalize() { std::sort(edges_.begin(), edges_.end(), canonicalEdgeLess); }

void SpgGraph::checkIntegrity() const {
  for (const auto& [id, node] : nodes_) {
    if (node.id != id) throw IntegrityError("node keyed '" + id + "' has id '" + node.id + "'");
    if (!node.types.empty() && !node.types.contains(node.label)) {
      throw IntegrityError("node '" + id + "' label '" + node.label + "' is not among its types");
    }
  }
  std::unordered_set<std::string> ids;
  for (const auto& edge : edges_) {
    if (!ids.insert(edge.id).second) throw IntegrityError("duplicate edge id '" + edge.id + "'");
    if (!nodes_.contains(edge.source)) {
      throw IntegrityError("edge '" + edge.id + "' source '" + edge.source + "' is not a node");
    }
    if (!nodes_.contains(edge.target)) {
      throw IntegrityError("edge '" + edge.id + "' target '" + edge.target + "' is not a node");
    }
  }
}

bool operator==(const SpgGraph& a, const SpgGraph& b) {
  if (a.nodes_ != b.nodes_ || a.edges_.size() != b.edges_.size()) return false;
  std::vector<SpgEdge> ea = a.edges_;
  std::vector<SpgEdge> eb = b.edges_;
  std::sort(ea.begin(), ea.end(), canonicalEdgeLess);
  std::sort(eb.begin(), eb.end(), canonicalEdgeLess);
  return ea == eb;
}

bool sameStructure(const SpgGraph& a, const SpgGraph& b) {
  if (a.nodeCount() != b.nodeCount() || a.edgeCount() != b.edgeCount()) return false;
  for (const auto& [id, node] : a.nodes()) {
    const SpgNode* other = b.findNode(id);
    if (!other || other->label != node.label || other->properties != node.properties) {
      return false;
    }
  }
  auto shape = [](const SpgGraph& g) {
    std::vector<std::tuple<std::string, std::string, std::string, PropertyMap>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.source, e.target, e.label, e.properties);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      if (std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) !=
          std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y))) {
        return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) <
               std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
      }
      // Property maps have no natural order; compare their string forms.
      auto flat = [](const PropertyMap& m) {
        std::vector<std::pair<std::string, std::string>> v;
        for (const auto& [k, val] : m) v.emplace_back(k, val.toString());
        return v;
      };
      return flat(std::get<3>(x)) < flat(std::get<3>(y));
    });
    return out;
  };
  return shape(a) == shape(b);
}

void Diagnostics::warn(std::string code, std::string message, std::string term) {
  entries_.push_back({Severity::Warning, std::move(code), std::move(message), std::move(term)});
}

void Diagnostics::error(std::string code, std::string message, std::string term) {
  entries_.push_back({Severity::Error, std::move(code), std::move(message), std::move(term)});
}

void Diagnostics::append(const Diagnostics& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool Diagnostics::hasErrors() const { return count(Severity::Error) > 0; }

std::size_t Diagnostics::count(Severity severity) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [&](const Diagnostic& d) { return d.severity == severity; }));
}

std::size_t Diagnostics::count(const std::string& code) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [&](const Diagnostic& d) { return d.code == code; }));
}

std::string Diagnostics::toString() const {
  std::string out;
  for (const auto& d : entries_) {
    out += d.severity == Severity::Error ? "error: [" : "warning: [";
    out += d.code;
    out += "] ";
    out += d.message;
    out += '\n';
  }
  return out;
}

namespace {
std::string summarize(const Diagnostics& diagnostics) {
  for (const auto& d : diagnostics.entries()) {
    if (d.severity == Severity::Error) return d.message;
  }
  return "operation failed";
}
}  // namespace

DiagnosticError::DiagnosticError(Diagnostics diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace spg::model
