#include "spg/rdf/RdfGraph.h"

#include <stdexcept>

namespace spg::rdf {

TermDictionary::TermDictionary(const TermDictionary& other) {
  ids_.reserve(other.terms_.size());
  terms_.reserve(other.terms_.size());
  for (const Term* term : other.terms_) intern(*term);
}

TermDictionary& TermDictionary::operator=(const TermDictionary& other) {
  if (this != &other) {
    TermDictionary copy(other);
    *this = std::move(copy);
  }
  return *this;
}

TermId TermDictionary::intern(const Term& term) {
  auto [it, inserted] = ids_.try_emplace(term, static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(&it->first);
  return it->second;
}

std::optional<TermId> TermDictionary::find(const Term& term) const {
  auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool RdfGraph::add(const Term& subject, const Term& predicate, const Term& object) {
  if (subject.isLiteral()) {
    throw std::invalid_argument("triple subject must not be a literal: " +
                                subject.toNTriples());
  }
  if (!predicate.isIri()) {
    throw std::invalid_argument("triple predicate must be an IRI: " +
                                predicate.toNTriples());
  }
  EncodedTriple encoded{dictionary_.intern(subject), dictionary_.intern(predicate),
                        dictionary_.intern(object)};
  if (!seen_.insert(encoded).second) return false;
  triples_.push_back(encoded);
  return true;
}

bool RdfGraph::add(const Triple& triple) {
  return add(triple.subject, triple.predicate, triple.object);
}

bool RdfGraph::contains(const Triple& triple) const {
  auto s = dictionary_.find(triple.subject);
  auto p = dictionary_.find(triple.predicate);
  auto o = dictionary_.find(triple.object);
  if (!s || !p || !o) return false;
  return seen_.contains(EncodedTriple{*s, *p, *o});
}

std::size_t RdfGraph::distinctSubjectCount() const {
  std::unordered_set<TermId> subjects;
  for (const auto& t : triples_) subjects.insert(t.subject);
  return subjects.size();
}

Triple RdfGraph::decode(const EncodedTriple& triple) const {
  return Triple{term(triple.subject), term(triple.predicate), term(triple.object)};
}

std::vector<Triple> RdfGraph::triples() const {
  std::vector<Triple> out;
  out.reserve(triples_.size());
  for (const auto& t : triples_) out.push_back(decode(t));
  return out;
}

std::set<Triple> RdfGraph::tripleSet() const {
  std::set<Triple> out;
  for (const auto& t : triples_) out.insert(decode(t));
  return out;
}

void RdfGraph::merge(const RdfGraph& other) {
  auto blankLabels = [](const RdfGraph& graph) {
    std::unordered_set<std::string> labels;
    for (const auto& t : graph.triples_) {
      for (TermId id : {t.subject, t.object}) {
        if (graph.term(id).isBlank()) labels.insert(graph.term(id).value());
      }
    }
    return labels;
  };
  const std::unordered_set<std::string> existing = blankLabels(*this);
  std::unordered_set<std::string> used = existing;
  used.merge(blankLabels(other));

  std::unordered_map<std::string, std::string> renamed;
  auto mapTerm = [&](const Term& term) -> Term {
    if (!term.isBlank() || !existing.contains(term.value())) return term;
    auto it = renamed.find(term.value());
    if (it == renamed.end()) {
      std::string label;
      do {
        label = "b" + std::to_string(++blankCounter_);
      } while (used.contains(label));
      used.insert(label);
      it = renamed.emplace(term.value(), std::move(label)).first;
    }
    return Term::blank(it->second);
  };

  for (const auto& t : other.triples()) {
    add(mapTerm(t.subject), t.predicate, mapTerm(t.object));
  }
}

}  // namespace spg::rdf
