#include "spg/projector/Mapping.h"

#include <algorithm>
#include <set>

#include "spg/rdf/Parsers.h"

namespace spg::projector {

namespace {

const std::map<std::string, RoleKind, std::less<>>& roleNames() {
  static const std::map<std::string, RoleKind, std::less<>> names{
      {"node-id", RoleKind::NodeId},         {"node-label", RoleKind::NodeLabel},
      {"node-property", RoleKind::NodeProperty}, {"edge-source", RoleKind::EdgeSource},
      {"edge-target", RoleKind::EdgeTarget}, {"edge-label", RoleKind::EdgeLabel},
      {"edge-property", RoleKind::EdgeProperty}, {"edge-id", RoleKind::EdgeId},
  };
  return names;
}

// Splits at commas outside parentheses.
std::vector<std::string> splitTopLevel(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(util::trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(util::trim(current));
  return parts;
}

std::string stripVariable(std::string name) {
  if (name.starts_with("?")) name.erase(0, 1);
  return name;
}

bool isNodeVariable(const std::vector<VariableRole>& roles) {
  return std::any_of(roles.begin(), roles.end(), [](const VariableRole& r) {
    return r.kind == RoleKind::NodeId || r.kind == RoleKind::EdgeSource ||
           r.kind == RoleKind::EdgeTarget;
  });
}

std::string nodeIdOf(const rdf::Term& term) { return term.value(); }

std::string nameOf(const rdf::Term& term) {
  return term.isIri() ? rdf::localName(term.value()) : term.value();
}

model::PropertyValue valueOf(const rdf::Term& term) {
  return term.isLiteral() ? model::PropertyValue::fromLiteral(term)
                          : model::PropertyValue::text(term.value());
}

void setProperty(model::PropertyMap& properties, const std::string& key,
                 model::PropertyValue value, const std::string& element,
                 model::Diagnostics& diagnostics) {
  auto [it, inserted] = properties.try_emplace(key, value);
  if (inserted || it->second == value) return;
  diagnostics.warn("property-collision",
                   "property '" + key + "' on '" + element + "' bound to '" + value.toString() +
                       "' and '" + it->second.toString() + "'; keeping the later value",
                   element);
  it->second = std::move(value);
}

}  // namespace

bool MappingSpec::hasEdges() const {
  for (const auto& [var, list] : roles) {
    for (const auto& role : list) {
      switch (role.kind) {
        case RoleKind::EdgeSource:
        case RoleKind::EdgeTarget:
        case RoleKind::EdgeLabel:
        case RoleKind::EdgeProperty:
        case RoleKind::EdgeId:
          return true;
        default:
          break;
      }
    }
  }
  return false;
}

void MappingSpec::validate() const {
  std::size_t sources = 0;
  std::size_t targets = 0;
  for (const auto& [var, list] : roles) {
    for (const auto& role : list) {
      if (role.kind == RoleKind::EdgeSource) ++sources;
      if (role.kind == RoleKind::EdgeTarget) ++targets;
      if (role.kind == RoleKind::NodeLabel || role.kind == RoleKind::NodeProperty) {
        auto owner = roles.find(role.owner);
        if (owner == roles.end() || !isNodeVariable(owner->second)) {
          throw MappingError("role of ?" + var + " refers to ?" + role.owner +
                             ", which is not a node variable");
        }
      }
    }
  }
  if (hasEdges() && (sources != 1 || targets != 1)) {
    throw MappingError("an edge mapping needs exactly one edge-source and one edge-target (found " +
                       std::to_string(sources) + " and " + std::to_string(targets) + ")");
  }
}

std::vector<VariableRole> parseRoles(std::string_view text) {
  std::vector<VariableRole> out;
  for (const auto& part : splitTopLevel(text)) {
    if (part.empty()) throw MappingError("empty role in '" + std::string(text) + "'");
    std::string name = part;
    std::vector<std::string> args;
    if (auto open = part.find('('); open != std::string::npos) {
      if (part.back() != ')') throw MappingError("unbalanced parentheses in role '" + part + "'");
      name = util::trim(std::string_view(part).substr(0, open));
      for (auto& arg : splitTopLevel(std::string_view(part).substr(open + 1, part.size() - open - 2))) {
        args.push_back(arg);
      }
    }
    auto it = roleNames().find(name);
    if (it == roleNames().end()) throw MappingError("unknown role '" + name + "'");
    VariableRole role{it->second, {}, {}};
    auto expect = [&](std::size_t n) {
      if (args.size() != n || std::any_of(args.begin(), args.end(), [](auto& a) { return a.empty(); })) {
        throw MappingError("role '" + name + "' takes " + std::to_string(n) + " argument(s)");
      }
    };
    switch (role.kind) {
      case RoleKind::NodeLabel:
        expect(1);
        role.owner = stripVariable(args[0]);
        break;
      case RoleKind::NodeProperty:
        expect(2);
        role.key = args[0];
        role.owner = stripVariable(args[1]);
        break;
      case RoleKind::EdgeProperty:
        expect(1);
        role.key = args[0];
        break;
      default:
        expect(0);
    }
    out.push_back(std::move(role));
  }
  return out;
}

MappingSpec mappingFromEntries(const std::vector<util::KeyValueEntry>& entries) {
  store::PrefixMap prefixes = store::defaultPrefixes();
  for (const auto& e : entries) {
    if (e.key.starts_with("prefix.")) prefixes[e.key.substr(7)] = e.value;
  }
  MappingSpec spec;
  for (const auto& e : entries) {
    try {
      if (e.key == "pattern") {
        spec.patterns.push_back(store::parseTriplePattern(e.value, prefixes));
      } else if (e.key.starts_with("role.")) {
        std::string var = stripVariable(e.key.substr(5));
        if (!store::isValidVariableName(var)) {
          throw MappingError("bad variable name '" + var + "'");
        }
        for (auto& role : parseRoles(e.value)) spec.assign(var, std::move(role));
      }
    } catch (const std::invalid_argument& err) {
      throw MappingError("line " + std::to_string(e.line) + ": " + err.what());
    } catch (const MappingError& err) {
      throw MappingError("line " + std::to_string(e.line) + ": " + err.what());
    }
  }
  return spec;
}

MappingSpec readMappingFile(const std::string& path) {
  return mappingFromEntries(util::readKeyValueFile(path));
}

ProjectionResult projectWithMapping(const store::GraphStore& store, const std::string& graphName,
                                    const std::vector<store::TriplePattern>& patterns,
                                    const MappingSpec& mapping, bool strict) {
  mapping.validate();
  if (patterns.empty()) throw MappingError("mapping has no patterns");
  std::set<std::string> bound;
  for (const auto& p : patterns) {
    for (auto& v : p.variables()) bound.insert(v);
  }
  for (const auto& [var, list] : mapping.roles) {
    if (!bound.contains(var)) throw MappingError("mapping references unbound variable ?" + var);
  }

  store::BindingTable table = store.match(graphName, patterns);
  auto column = [&](const std::string& var) { return *table.column(var); };

  std::vector<std::pair<std::size_t, std::string>> nodeVars;  // column, variable
  std::optional<std::size_t> source, target, edgeLabel, edgeId;
  std::vector<std::pair<std::size_t, std::string>> edgeProps;  // column, key
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> nodeProps;  // column, owner, key
  std::vector<std::pair<std::size_t, std::size_t>> nodeLabels;  // column, owner
  for (const auto& [var, list] : mapping.roles) {
    std::size_t col = column(var);
    if (isNodeVariable(list)) nodeVars.emplace_back(col, var);
    for (const auto& role : list) {
      switch (role.kind) {
        case RoleKind::EdgeSource: source = col; break;
        case RoleKind::EdgeTarget: target = col; break;
        case RoleKind::EdgeLabel: edgeLabel = col; break;
        case RoleKind::EdgeId: edgeId = col; break;
        case RoleKind::EdgeProperty: edgeProps.emplace_back(col, role.key); break;
        case RoleKind::NodeProperty: nodeProps.emplace_back(col, column(role.owner), role.key); break;
        case RoleKind::NodeLabel: nodeLabels.emplace_back(col, column(role.owner)); break;
        case RoleKind::NodeId: break;
      }
    }
  }

  ProjectionResult result;
  model::Diagnostics& diagnostics = result.diagnostics;
  model::SpgGraph& out = result.graph;
  std::set<std::string> usedEdgeIds;
  std::map<std::string, std::size_t> nextOccurrence;
  for (const auto& row : table.rows) {
    bool rejected = false;
    for (const auto& [col, var] : nodeVars) {
      if (row[col].isLiteral()) {
        diagnostics.error("literal-node-id",
                          "node variable ?" + var + " bound to literal " + row[col].toNTriples(),
                          row[col].value());
        rejected = true;
      }
    }
    if (rejected) continue;

    for (const auto& [col, var] : nodeVars) out.upsertNode(nodeIdOf(row[col]));
    for (const auto& [col, owner] : nodeLabels) {
      out.upsertNode(nodeIdOf(row[owner])).types.insert(nameOf(row[col]));
    }
    for (const auto& [col, owner, key] : nodeProps) {
      model::SpgNode& node = out.upsertNode(nodeIdOf(row[owner]));
      setProperty(node.properties, key, valueOf(row[col]), node.id, diagnostics);
    }
    if (!source) continue;

    model::SpgEdge edge;
    edge.source = nodeIdOf(row[*source]);
    edge.target = nodeIdOf(row[*target]);
    edge.label = edgeLabel ? nameOf(row[*edgeLabel]) : "edge";
    for (const auto& [col, key] : edgeProps) {
      setProperty(edge.properties, key, valueOf(row[col]), edge.source, diagnostics);
    }
    if (edgeId && !usedEdgeIds.contains(nodeIdOf(row[*edgeId]))) {
      edge.id = nodeIdOf(row[*edgeId]);
    } else {
      std::string predicate = edgeLabel && row[*edgeLabel].isIri() ? row[*edgeLabel].value() : edge.label;
      std::string base = edge.source + "|" + predicate + "|" + edge.target + "|";
      std::size_t& k = nextOccurrence[base];
      while (usedEdgeIds.contains(base + std::to_string(k))) ++k;
      edge.id = base + std::to_string(k++);
    }
    usedEdgeIds.insert(edge.id);
    out.addEdge(std::move(edge));
  }

  for (const auto& [id, node] : out.nodes()) {
    out.findNode(id)->label = choosePrimaryLabel(node.types, nullptr);
  }
  out.canonicalize();
  if (strict && diagnostics.hasErrors()) throw model::DiagnosticError(diagnostics);
  return result;
}

ProjectionResult projectWithMapping(const store::GraphStore& store, const std::string& graphName,
                                    const MappingSpec& mapping, bool strict) {
  return projectWithMapping(store, graphName, mapping.patterns, mapping, strict);
}

}  // namespace spg::projector
