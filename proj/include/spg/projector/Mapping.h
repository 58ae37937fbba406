#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spg/projector/Projector.h"
#include "spg/store/GraphStore.h"
#include "spg/store/TriplePattern.h"
#include "spg/util/KeyValue.h"

namespace spg::projector {

class MappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RoleKind {
  NodeId,
  NodeLabel,     // owner: node variable the label applies to
  NodeProperty,  // key, owner
  EdgeSource,
  EdgeTarget,
  EdgeLabel,
  EdgeProperty,  // key
  EdgeId,
};

struct VariableRole {
  RoleKind kind;
  std::string key;
  std::string owner;

  friend bool operator==(const VariableRole&, const VariableRole&) = default;
};

// How the variables of a binding table turn into nodes and edges. There is a
// single edge group: when any edge role is present, exactly one edge-source
// and one edge-target variable are required.
struct MappingSpec {
  std::vector<store::TriplePattern> patterns;
  std::map<std::string, std::vector<VariableRole>> roles;

  void assign(const std::string& variable, VariableRole role) {
    roles[variable].push_back(std::move(role));
  }
  bool hasEdges() const;
  // Throws MappingError for a malformed edge group or a dangling owner.
  void validate() const;
};

// `node-id`, `node-label(owner)`, `node-property(key, owner)`, `edge-source`,
// `edge-target`, `edge-label`, `edge-property(key)`, `edge-id`, comma separated.
std::vector<VariableRole> parseRoles(std::string_view text);

// Entries `prefix.<p> = <iri>`, `pattern = <triple pattern>` and
// `role.<var> = <roles>`; other keys are ignored so the entries may come from a
// larger config file.
MappingSpec mappingFromEntries(const std::vector<util::KeyValueEntry>& entries);
MappingSpec readMappingFile(const std::string& path);

// Runs the patterns and folds every binding row into nodes and edges.
// Throws MappingError when a role names a variable the patterns do not bind,
// and model::DiagnosticError in strict mode when a row was rejected.
ProjectionResult projectWithMapping(const store::GraphStore& store, const std::string& graphName,
                                    const std::vector<store::TriplePattern>& patterns,
                                    const MappingSpec& mapping, bool strict = true);
ProjectionResult projectWithMapping(const store::GraphStore& store, const std::string& graphName,
                                    const MappingSpec& mapping, bool strict = true);

}  // namespace spg::projector
