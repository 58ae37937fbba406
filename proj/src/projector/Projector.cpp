#include "spg/projector/Projector.h"

#include <algorithm>
#include <numeric>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "spg/rdf/Parsers.h"

namespace spg::projector {

namespace {

using model::Diagnostics;
using model::PropertyValue;
using rdf::EncodedTriple;
using rdf::TermId;

constexpr const char* kStatementLabel = "Statement";

struct IdStatement {
  TermId node;
  TermId subject;
  TermId predicate;
  TermId object;
  std::vector<std::uint32_t> extras;  // indices into graph.encoded()
};

// Sets `key` on `properties`, reporting conflicting re-assertions.
void assignProperty(model::PropertyMap& properties, const std::string& key, PropertyValue value,
                    const std::string& element, Diagnostics& diagnostics) {
  auto [it, inserted] = properties.try_emplace(key, value);
  if (inserted || it->second == value) return;
  diagnostics.warn("property-collision",
                   "property '" + key + "' on '" + element + "' re-asserted with value '" +
                       value.toString() + "' (was '" + it->second.toString() +
                       "'); keeping the later value",
                   element);
  it->second = std::move(value);
}

class Projection {
 public:
  Projection(const rdf::RdfGraph& graph, const ProjectionConfig& config)
      : graph_(graph),
        config_(config),
        triples_(graph.encoded()),
        names_(graph.dictionary().size()),
        forms_(graph.dictionary().size()) {
    config.vocabulary.validate();
    const auto& dict = graph.dictionary();
    auto lookup = [&](const std::string& iri) { return dict.find(rdf::Term::iri(iri)); };
    type_ = lookup(config.vocabulary.type);
    statementClass_ = lookup(config.vocabulary.statement);
    subject_ = lookup(config.vocabulary.subject);
    predicate_ = lookup(config.vocabulary.predicate);
    object_ = lookup(config.vocabulary.object);
    buildSubjectIndex();
  }

  void scan() {
    consumed_.assign(graph_.dictionary().size(), false);
    std::vector<TermId> subjects;
    for (TermId id = 0; id + 1 < offsets_.size(); ++id) {
      if (offsets_[id] != offsets_[id + 1]) subjects.push_back(id);
    }
    std::sort(subjects.begin(), subjects.end(),
              [&](TermId a, TermId b) { return nodeId(a) < nodeId(b); });

    for (TermId s : subjects) scanSubject(s);
    for (const auto& st : statements_) consumed_[st.node] = true;
  }

  std::vector<StatementDescriptor> descriptors() const {
    std::vector<StatementDescriptor> out;
    out.reserve(statements_.size());
    for (const auto& st : statements_) {
      StatementDescriptor d{graph_.term(st.node), graph_.term(st.subject),
                            graph_.term(st.predicate), graph_.term(st.object), {}};
      for (auto index : st.extras) d.extras.push_back(graph_.decode(triples_[index]));
      std::sort(d.extras.begin(), d.extras.end());
      out.push_back(std::move(d));
    }
    return out;
  }

  Diagnostics& diagnostics() { return diagnostics_; }

  model::SpgGraph project() {
    std::unordered_set<TermId> keptStatementNodes;
    checkNesting(keptStatementNodes);

    std::vector<model::SpgEdge> edges = statementEdges();

    std::vector<Assertion> assertions;
    std::map<TermId, std::set<std::string>> types;
    std::set<TermId> nodeTerms;
    for (const auto& st : statements_) {
      if (graph_.term(st.object).isLiteral()) literalStatement(st, assertions);
    }
    for (std::uint32_t i = 0; i < triples_.size(); ++i) {
      const EncodedTriple& t = triples_[i];
      if (consumed_[t.subject]) continue;
      nodeTerms.insert(t.subject);
      const rdf::Term& object = graph_.term(t.object);
      if (object.isLiteral()) {
        assertions.push_back({t.subject, name(t.predicate), PropertyValue::fromLiteral(object),
                              {form(t.subject), form(t.predicate), form(t.object), {}, {}}});
      } else if (type_ && t.predicate == *type_) {
        types[t.subject].insert(name(t.object));
      } else {
        directEdges_.push_back(i);
      }
    }

    model::SpgGraph out;
    for (TermId id : keptStatementNodes) {
      model::SpgNode& node = out.upsertNode(nodeId(id));
      node.types.insert(kStatementLabel);
    }
    for (TermId id : nodeTerms) out.upsertNode(nodeId(id));
    for (const auto& [id, names] : types) out.upsertNode(nodeId(id)).types.insert(names.begin(), names.end());

    std::sort(assertions.begin(), assertions.end(),
              [](const Assertion& a, const Assertion& b) { return a.order < b.order; });
    for (auto& a : assertions) {
      model::SpgNode& node = out.upsertNode(nodeId(a.node));
      assignProperty(node.properties, a.key, std::move(a.value), node.id, diagnostics_);
    }

    std::unordered_set<std::string> usedIds;
    for (auto& edge : edges) {
      out.upsertNode(edge.source);
      out.upsertNode(edge.target);
      usedIds.insert(edge.id);
      out.addEdge(std::move(edge));
    }
    for (std::uint32_t index : directEdges_) {
      const EncodedTriple& t = triples_[index];
      std::string base = nodeId(t.subject) + "|" + graph_.term(t.predicate).value() + "|" +
                         nodeId(t.object) + "|";
      std::size_t k = 0;
      while (usedIds.contains(base + std::to_string(k))) ++k;
      std::string id = base + std::to_string(k);
      usedIds.insert(id);
      out.upsertNode(nodeId(t.subject));
      out.upsertNode(nodeId(t.object));
      out.addEdge({id, nodeId(t.subject), nodeId(t.object), name(t.predicate), {}});
    }

    for (const auto& [id, node] : out.nodes()) {
      out.findNode(id)->label = choosePrimaryLabel(node.types, config_.ontology);
    }
    out.canonicalize();
    return out;
  }

 private:
  struct Assertion {
    TermId node;
    std::string key;
    PropertyValue value;
    std::array<std::string, 5> order;
  };

  void buildSubjectIndex() {
    offsets_.assign(graph_.dictionary().size() + 1, 0);
    for (const auto& t : triples_) ++offsets_[t.subject + 1];
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    bySubject_.resize(triples_.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t i = 0; i < triples_.size(); ++i) {
      bySubject_[cursor[triples_[i].subject]++] = i;
    }
  }

  std::span<const std::uint32_t> triplesOf(TermId subject) const {
    return std::span<const std::uint32_t>(bySubject_).subspan(
        offsets_[subject], offsets_[subject + 1] - offsets_[subject]);
  }

  const std::string* variableName(TermId id) const {
    const rdf::Term& term = graph_.term(id);
    if (config_.variableNamespace && term.isIri() &&
        term.value().starts_with(*config_.variableNamespace)) {
      return &term.value();
    }
    return nullptr;
  }

  std::string nodeId(TermId id) const {
    if (const std::string* var = variableName(id)) {
      return "?" + var->substr(config_.variableNamespace->size());
    }
    return graph_.term(id).value();
  }

  // Label / key form of a term.
  const std::string& name(TermId id) {
    if (!names_[id]) {
      if (variableName(id)) {
        names_[id] = nodeId(id);
      } else {
        const rdf::Term& term = graph_.term(id);
        names_[id] = term.isLiteral() ? term.value() : rdf::localName(term.value());
      }
    }
    return *names_[id];
  }

  const std::string& form(TermId id) {
    if (!forms_[id]) forms_[id] = graph_.term(id).toNTriples();
    return *forms_[id];
  }

  void scanSubject(TermId s) {
    bool typed = false;
    std::vector<std::uint32_t> subj, pred, obj, rest;
    for (std::uint32_t index : triplesOf(s)) {
      const EncodedTriple& t = triples_[index];
      if (type_ && statementClass_ && t.predicate == *type_ && t.object == *statementClass_) {
        typed = true;
      } else if (subject_ && t.predicate == *subject_) {
        subj.push_back(index);
      } else if (predicate_ && t.predicate == *predicate_) {
        pred.push_back(index);
      } else if (object_ && t.predicate == *object_) {
        obj.push_back(index);
      } else {
        rest.push_back(index);
      }
    }
    bool complete = !subj.empty() && !pred.empty() && !obj.empty();
    if (!typed && !complete) return;

    const std::string id = nodeId(s);
    std::vector<std::string> missing;
    std::vector<std::string> duplicated;
    auto tally = [&](const std::vector<std::uint32_t>& found, const std::string& role) {
      if (found.empty()) missing.push_back(rdf::localName(role));
      if (found.size() > 1) duplicated.push_back(rdf::localName(role));
    };
    tally(subj, config_.vocabulary.subject);
    tally(pred, config_.vocabulary.predicate);
    tally(obj, config_.vocabulary.object);
    if (!missing.empty() || !duplicated.empty()) {
      std::string detail;
      for (const auto& m : missing) detail += (detail.empty() ? "" : ", ") + ("missing " + m);
      for (const auto& d : duplicated) detail += (detail.empty() ? "" : ", ") + ("duplicate " + d);
      diagnostics_.error("incomplete-reification",
                         "incomplete reification: statement node '" + id + "' (" + detail + ")",
                         id);
      return;
    }

    TermId subject = triples_[subj[0]].object;
    TermId predicate = triples_[pred[0]].object;
    TermId object = triples_[obj[0]].object;
    if (graph_.term(subject).isLiteral() || !graph_.term(predicate).isIri()) {
      diagnostics_.error("invalid-reification",
                         "invalid reification: statement node '" + id +
                             "' needs a resource subject and an IRI predicate",
                         id);
      return;
    }
    statements_.push_back({s, subject, predicate, object, std::move(rest)});
  }

  void checkNesting(std::unordered_set<TermId>& kept) {
    auto report = [&](TermId inner, const std::string& message) {
      std::string id = nodeId(inner);
      if (config_.strict) {
        diagnostics_.error("nested-reification", message, id);
      } else {
        diagnostics_.warn("nested-reification", message + "; kept as a Statement node", id);
      }
      kept.insert(inner);
    };
    for (const auto& st : statements_) {
      for (TermId endpoint : {st.subject, st.object}) {
        if (consumed_[endpoint]) {
          report(endpoint, "nested reification: statement '" + nodeId(st.node) +
                               "' refers to statement node '" + nodeId(endpoint) + "'");
        }
      }
    }
    for (const auto& t : triples_) {
      if (consumed_[t.subject] || (type_ && t.predicate == *type_)) continue;
      if (consumed_[t.object]) {
        report(t.object, "triple from '" + nodeId(t.subject) + "' refers to statement node '" +
                             nodeId(t.object) + "'");
      }
    }
  }

  // Extras sorted canonically, as (key, value) pairs.
  std::vector<std::pair<std::string, PropertyValue>> extrasOf(const IdStatement& st,
                                                              Diagnostics& diagnostics) const {
    std::vector<std::uint32_t> sorted = st.extras;
    std::vector<std::pair<std::string, std::string>> keys;
    std::sort(sorted.begin(), sorted.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto& ta = triples_[a];
      const auto& tb = triples_[b];
      return std::make_pair(graph_.term(ta.predicate).toNTriples(), graph_.term(ta.object).toNTriples()) <
             std::make_pair(graph_.term(tb.predicate).toNTriples(), graph_.term(tb.object).toNTriples());
    });
    std::vector<std::pair<std::string, PropertyValue>> out;
    for (std::uint32_t index : sorted) {
      const EncodedTriple& t = triples_[index];
      const rdf::Term& value = graph_.term(t.object);
      std::string key = variableName(t.predicate) ? nodeId(t.predicate)
                                                  : rdf::localName(graph_.term(t.predicate).value());
      if (value.isLiteral()) {
        out.emplace_back(std::move(key), PropertyValue::fromLiteral(value));
      } else {
        diagnostics.warn("resource-extra",
                         "statement '" + nodeId(st.node) + "' property '" + key +
                             "' has a resource value; stored as text",
                         nodeId(st.node));
        out.emplace_back(std::move(key), PropertyValue::text(nodeId(t.object)));
      }
    }
    return out;
  }

  std::vector<model::SpgEdge> statementEdges() {
    std::vector<const IdStatement*> work;
    for (const auto& st : statements_) {
      if (!graph_.term(st.object).isLiteral()) work.push_back(&st);
    }
    // Warm the shared name cache so workers only read it.
    for (const IdStatement* st : work) name(st->predicate);

    unsigned threads = std::max(1u, std::min<unsigned>(config_.threads, work.size() / 256 + 1));
    std::vector<std::vector<model::SpgEdge>> chunks(threads);
    std::vector<Diagnostics> chunkDiagnostics(threads);
    auto worker = [&](unsigned chunk) {
      std::size_t begin = work.size() * chunk / threads;
      std::size_t end = work.size() * (chunk + 1) / threads;
      for (std::size_t i = begin; i < end; ++i) {
        const IdStatement& st = *work[i];
        model::SpgEdge edge{nodeId(st.node), nodeId(st.subject), nodeId(st.object),
                            *names_[st.predicate], {}};
        for (auto& [key, value] : extrasOf(st, chunkDiagnostics[chunk])) {
          assignProperty(edge.properties, key, std::move(value), edge.id, chunkDiagnostics[chunk]);
        }
        chunks[chunk].push_back(std::move(edge));
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned c = 0; c < threads; ++c) pool.emplace_back(worker, c);
    }
    std::vector<model::SpgEdge> edges;
    edges.reserve(work.size());
    for (unsigned c = 0; c < threads; ++c) {
      std::move(chunks[c].begin(), chunks[c].end(), std::back_inserter(edges));
      diagnostics_.append(chunkDiagnostics[c]);
    }
    return edges;
  }

  void literalStatement(const IdStatement& st, std::vector<Assertion>& assertions) {
    const std::string& key = name(st.predicate);
    std::array<std::string, 5> base{form(st.subject), form(st.predicate), form(st.object), {}, {}};
    assertions.push_back(
        {st.subject, key, PropertyValue::fromLiteral(graph_.term(st.object)), base});
    for (std::uint32_t index : st.extras) {
      const EncodedTriple& t = triples_[index];
      const rdf::Term& value = graph_.term(t.object);
      std::array<std::string, 5> order = base;
      order[3] = form(t.predicate);
      order[4] = form(t.object);
      std::string extraKey = key + "." + name(t.predicate);
      if (value.isLiteral()) {
        assertions.push_back({st.subject, extraKey, PropertyValue::fromLiteral(value), order});
      } else {
        diagnostics_.warn("resource-extra",
                          "statement '" + nodeId(st.node) + "' property '" + name(t.predicate) +
                              "' has a resource value; stored as text",
                          nodeId(st.node));
        assertions.push_back({st.subject, extraKey, PropertyValue::text(nodeId(t.object)), order});
      }
    }
  }

  const rdf::RdfGraph& graph_;
  const ProjectionConfig& config_;
  std::span<const EncodedTriple> triples_;
  std::optional<TermId> type_, statementClass_, subject_, predicate_, object_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> bySubject_;
  std::vector<std::optional<std::string>> names_;
  std::vector<std::optional<std::string>> forms_;
  std::vector<IdStatement> statements_;
  std::vector<bool> consumed_;
  std::vector<std::uint32_t> directEdges_;
  Diagnostics diagnostics_;
};

void sortDiagnostics(Diagnostics& diagnostics) {
  std::vector<model::Diagnostic> entries = diagnostics.entries();
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.term, a.code, a.message) < std::tie(b.term, b.code, b.message);
  });
  Diagnostics sorted;
  for (auto& d : entries) {
    if (d.severity == model::Severity::Error) {
      sorted.error(std::move(d.code), std::move(d.message), std::move(d.term));
    } else {
      sorted.warn(std::move(d.code), std::move(d.message), std::move(d.term));
    }
  }
  diagnostics = std::move(sorted);
}

}  // namespace

StatementScan findStatements(const rdf::RdfGraph& graph,
                             const rdf::ReificationVocabulary& vocabulary) {
  ProjectionConfig config;
  config.vocabulary = vocabulary;
  Projection projection(graph, config);
  projection.scan();
  return {projection.descriptors(), projection.diagnostics()};
}

StatementScan findStatements(const store::GraphStore& store, const std::string& graphName,
                             const rdf::ReificationVocabulary& vocabulary) {
  return findStatements(*store.snapshot(graphName), vocabulary);
}

ProjectionResult project(const rdf::RdfGraph& graph, const ProjectionConfig& config) {
  Projection projection(graph, config);
  projection.scan();
  model::SpgGraph spg = projection.project();
  Diagnostics diagnostics = std::move(projection.diagnostics());
  sortDiagnostics(diagnostics);
  if (config.strict && diagnostics.hasErrors()) {
    throw model::DiagnosticError(std::move(diagnostics));
  }
  return {std::move(spg), std::move(diagnostics)};
}

ProjectionResult project(const store::GraphStore& store, const std::string& graphName,
                         const ProjectionConfig& config) {
  return project(*store.snapshot(graphName), config);
}

std::string choosePrimaryLabel(const std::set<std::string>& types,
                               const ontology::OntologySchema* ontology) {
  if (types.empty()) return model::kDefaultLabel;
  if (!ontology) return *types.begin();

  std::map<std::string, std::set<std::string>> closures;
  for (const auto& type : types) {
    std::set<std::string> names;
    for (const auto& cls : ontology->classesNamed(type)) {
      for (const auto& super : ontology->superclassClosure(cls)) names.insert(rdf::localName(super));
    }
    names.insert(type);
    closures.emplace(type, std::move(names));
  }
  // A type is most specific unless another asserted type lies strictly below it.
  for (const auto& candidate : types) {
    bool hasStrictSubtype = false;
    for (const auto& other : types) {
      if (other == candidate) continue;
      if (closures[other].contains(candidate) && !closures[candidate].contains(other)) {
        hasStrictSubtype = true;
        break;
      }
    }
    if (!hasStrictSubtype) return candidate;
  }
  return *types.begin();
}

}  // namespace spg::projector
