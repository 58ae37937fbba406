#include "spg/store/LocalStore.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace spg::store {

namespace {

using rdf::EncodedTriple;
using rdf::TermId;
using Key = std::array<TermId, 3>;

Key keyOf(IndexedGraph::Order order, const EncodedTriple& t) {
  switch (order) {
    case IndexedGraph::Order::Spo: return {t.subject, t.predicate, t.object};
    case IndexedGraph::Order::Pos: return {t.predicate, t.object, t.subject};
    case IndexedGraph::Order::Osp: return {t.object, t.subject, t.predicate};
  }
  return {};
}

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

struct Slot {
  enum class Kind { Constant, Variable, Missing } kind;
  TermId value;  // term id or variable index
};

struct CompiledPattern {
  std::array<Slot, 3> slots;
};

}  // namespace

IndexedGraph::IndexedGraph(std::shared_ptr<const rdf::RdfGraph> graph) : graph_(std::move(graph)) {
  for (Order order : {Order::Spo, Order::Pos, Order::Osp}) {
    auto& index = indices_[static_cast<std::size_t>(order)];
    index.assign(graph_->encoded().begin(), graph_->encoded().end());
    std::sort(index.begin(), index.end(), [order](const EncodedTriple& a, const EncodedTriple& b) {
      return keyOf(order, a) < keyOf(order, b);
    });
  }
}

std::span<const EncodedTriple> IndexedGraph::lookup(std::optional<TermId> s,
                                                    std::optional<TermId> p,
                                                    std::optional<TermId> o) const {
  Order order = Order::Spo;
  Key prefix{};
  std::size_t length = 0;
  if (s && p && o) {
    prefix = {*s, *p, *o};
    length = 3;
  } else if (s && p) {
    prefix = {*s, *p, 0};
    length = 2;
  } else if (s && o) {
    order = Order::Osp;
    prefix = {*o, *s, 0};
    length = 2;
  } else if (p && o) {
    order = Order::Pos;
    prefix = {*p, *o, 0};
    length = 2;
  } else if (s) {
    prefix = {*s, 0, 0};
    length = 1;
  } else if (p) {
    order = Order::Pos;
    prefix = {*p, 0, 0};
    length = 1;
  } else if (o) {
    order = Order::Osp;
    prefix = {*o, 0, 0};
    length = 1;
  }
  const auto& index = indices_[static_cast<std::size_t>(order)];
  if (length == 0) return index;
  auto less = [&](const EncodedTriple& t, const Key& k) {
    Key tk = keyOf(order, t);
    return std::lexicographical_compare(tk.begin(), tk.begin() + length, k.begin(),
                                        k.begin() + length);
  };
  auto greater = [&](const Key& k, const EncodedTriple& t) {
    Key tk = keyOf(order, t);
    return std::lexicographical_compare(k.begin(), k.begin() + length, tk.begin(),
                                        tk.begin() + length);
  };
  auto first = std::lower_bound(index.begin(), index.end(), prefix, less);
  auto last = std::upper_bound(first, index.end(), prefix, greater);
  return {first, last};
}

std::optional<std::size_t> BindingTable::column(const std::string& variable) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == variable) return i;
  }
  return std::nullopt;
}

std::string BindingTable::toTsv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    out << (i ? "\t" : "") << '?' << variables[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i].toNTriples();
    out << '\n';
  }
  return out.str();
}

void LocalStore::load(rdf::RdfGraph graph, const std::string& name, LoadMode mode) {
  if (name.empty()) throw std::invalid_argument("named graph requires a non-empty name");
  auto it = graphs_.find(name);
  if (mode == LoadMode::Merge && it != graphs_.end()) {
    rdf::RdfGraph merged = it->second->graph();
    merged.merge(graph);
    graph = std::move(merged);
  }
  graph.setName(name);
  graphs_[name] =
      std::make_unique<IndexedGraph>(std::make_shared<const rdf::RdfGraph>(std::move(graph)));
}

bool LocalStore::drop(const std::string& name) { return graphs_.erase(name) > 0; }

bool LocalStore::contains(const std::string& name) const { return graphs_.contains(name); }

std::vector<std::string> LocalStore::graphNames() const {
  std::vector<std::string> names;
  for (const auto& [name, graph] : graphs_) names.push_back(name);
  return names;
}

const IndexedGraph& LocalStore::indexed(const std::string& name) const {
  auto it = graphs_.find(name);
  if (it == graphs_.end()) throw UnknownGraphError(name);
  return *it->second;
}

std::size_t LocalStore::tripleCount(const std::string& name) const {
  return indexed(name).graph().size();
}

std::shared_ptr<const rdf::RdfGraph> LocalStore::snapshot(const std::string& name) const {
  return indexed(name).shared();
}

std::vector<rdf::Triple> LocalStore::find(const std::string& name,
                                          const std::optional<rdf::Term>& subject,
                                          const std::optional<rdf::Term>& predicate,
                                          const std::optional<rdf::Term>& object) const {
  const IndexedGraph& ig = indexed(name);
  const auto& dict = ig.graph().dictionary();
  std::array<std::optional<TermId>, 3> ids;
  const std::optional<rdf::Term>* terms[] = {&subject, &predicate, &object};
  for (std::size_t i = 0; i < 3; ++i) {
    if (terms[i]->has_value()) {
      ids[i] = dict.find(**terms[i]);
      if (!ids[i]) return {};
    }
  }
  std::vector<rdf::Triple> out;
  for (const auto& t : ig.lookup(ids[0], ids[1], ids[2])) out.push_back(ig.graph().decode(t));
  return out;
}

BindingTable LocalStore::match(const std::string& name,
                               std::span<const TriplePattern> patterns) const {
  const IndexedGraph& ig = indexed(name);
  if (patterns.empty()) throw std::invalid_argument("basic graph pattern must not be empty");
  const auto& dict = ig.graph().dictionary();

  BindingTable table;
  std::vector<CompiledPattern> compiled;
  bool unsatisfiable = false;
  for (const auto& pattern : patterns) {
    pattern.validate();
    CompiledPattern cp;
    const PatternTerm* terms[] = {&pattern.subject, &pattern.predicate, &pattern.object};
    for (std::size_t i = 0; i < 3; ++i) {
      if (const auto* var = std::get_if<Variable>(terms[i])) {
        auto pos = std::find(table.variables.begin(), table.variables.end(), var->name);
        if (pos == table.variables.end()) {
          table.variables.push_back(var->name);
          pos = table.variables.end() - 1;
        }
        cp.slots[i] = {Slot::Kind::Variable,
                       static_cast<TermId>(pos - table.variables.begin())};
      } else if (auto id = dict.find(std::get<rdf::Term>(*terms[i]))) {
        cp.slots[i] = {Slot::Kind::Constant, *id};
      } else {
        cp.slots[i] = {Slot::Kind::Missing, 0};
        unsatisfiable = true;
      }
    }
    compiled.push_back(cp);
  }
  if (unsatisfiable) return table;

  // Greedy join order: most bound positions first, then smallest estimated
  // match count.
  auto constantLookup = [&](const CompiledPattern& cp) {
    std::array<std::optional<TermId>, 3> ids;
    for (std::size_t i = 0; i < 3; ++i) {
      if (cp.slots[i].kind == Slot::Kind::Constant) ids[i] = cp.slots[i].value;
    }
    return ig.lookup(ids[0], ids[1], ids[2]).size();
  };
  std::vector<std::size_t> estimates;
  for (const auto& cp : compiled) estimates.push_back(constantLookup(cp));

  std::vector<bool> varBound(table.variables.size(), false);
  std::vector<bool> scheduled(compiled.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < compiled.size(); ++step) {
    std::size_t best = compiled.size();
    int bestBound = -1;
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      if (scheduled[i]) continue;
      int bound = 0;
      for (const Slot& slot : compiled[i].slots) {
        bound += slot.kind == Slot::Kind::Constant ||
                 (slot.kind == Slot::Kind::Variable && varBound[slot.value]);
      }
      if (bound > bestBound || (bound == bestBound && estimates[i] < estimates[best])) {
        best = i;
        bestBound = bound;
      }
    }
    scheduled[best] = true;
    order.push_back(best);
    for (const Slot& slot : compiled[best].slots) {
      if (slot.kind == Slot::Kind::Variable) varBound[slot.value] = true;
    }
  }

  std::vector<std::vector<TermId>> rows{std::vector<TermId>(table.variables.size(), kUnbound)};
  for (std::size_t index : order) {
    const CompiledPattern& cp = compiled[index];
    std::vector<std::vector<TermId>> next;
    for (const auto& row : rows) {
      std::array<std::optional<TermId>, 3> ids;
      for (std::size_t i = 0; i < 3; ++i) {
        const Slot& slot = cp.slots[i];
        if (slot.kind == Slot::Kind::Constant) {
          ids[i] = slot.value;
        } else if (row[slot.value] != kUnbound) {
          ids[i] = row[slot.value];
        }
      }
      for (const EncodedTriple& t : ig.lookup(ids[0], ids[1], ids[2])) {
        std::vector<TermId> extended = row;
        const TermId values[] = {t.subject, t.predicate, t.object};
        bool consistent = true;
        for (std::size_t i = 0; i < 3 && consistent; ++i) {
          const Slot& slot = cp.slots[i];
          if (slot.kind != Slot::Kind::Variable) continue;
          TermId& cell = extended[slot.value];
          if (cell == kUnbound) {
            cell = values[i];
          } else if (cell != values[i]) {
            consistent = false;
          }
        }
        if (consistent) next.push_back(std::move(extended));
      }
    }
    rows = std::move(next);
    if (rows.empty()) break;
  }

  // Deterministic output: distinct rows ordered by their serialized tuple.
  std::vector<std::string> forms(dict.size());
  std::vector<bool> formed(dict.size(), false);
  auto form = [&](TermId id) -> const std::string& {
    if (!formed[id]) {
      forms[id] = dict.term(id).toNTriples();
      formed[id] = true;
    }
    return forms[id];
  };
  auto rowLess = [&](const std::vector<TermId>& a, const std::vector<TermId>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return form(a[i]) < form(b[i]);
    }
    return false;
  };
  std::sort(rows.begin(), rows.end(), rowLess);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  table.rows.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<rdf::Term> terms;
    terms.reserve(row.size());
    for (TermId id : row) terms.push_back(dict.term(id));
    table.rows.push_back(std::move(terms));
  }
  return table;
}

}  // namespace spg::store
