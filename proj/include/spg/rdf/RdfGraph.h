#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spg/rdf/Term.h"

namespace spg::rdf {

using TermId = std::uint32_t;

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

struct EncodedTriple {
  TermId subject = 0;
  TermId predicate = 0;
  TermId object = 0;

  friend bool operator==(const EncodedTriple&, const EncodedTriple&) = default;
  friend std::strong_ordering operator<=>(const EncodedTriple&,
                                          const EncodedTriple&) = default;
};

struct EncodedTripleHash {
  std::size_t operator()(const EncodedTriple& t) const noexcept {
    std::uint64_t h = t.subject;
    h = h * 0x9E3779B97F4A7C15ULL ^ t.predicate;
    h = h * 0x9E3779B97F4A7C15ULL ^ t.object;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Interns terms so triples can be stored as three integers.
class TermDictionary {
 public:
  TermDictionary() = default;
  TermDictionary(const TermDictionary& other);
  TermDictionary& operator=(const TermDictionary& other);
  TermDictionary(TermDictionary&&) noexcept = default;
  TermDictionary& operator=(TermDictionary&&) noexcept = default;

  TermId intern(const Term& term);
  std::optional<TermId> find(const Term& term) const;
  const Term& term(TermId id) const { return *terms_[id]; }
  std::size_t size() const { return terms_.size(); }

 private:
  // Keys of an unordered_map have stable addresses, so `terms_` can point
  // into them.
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::vector<const Term*> terms_;
};

// A named set of triples. Insertion order is kept for iteration; duplicates are
// dropped on insert.
class RdfGraph {
 public:
  explicit RdfGraph(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void setName(std::string name) { name_ = std::move(name); }

  // Returns false if the triple was already present. Throws
  // std::invalid_argument for a literal subject or non-IRI predicate.
  bool add(const Triple& triple);
  bool add(const Term& subject, const Term& predicate, const Term& object);

  bool contains(const Triple& triple) const;
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  std::size_t distinctSubjectCount() const;

  const TermDictionary& dictionary() const { return dictionary_; }
  const Term& term(TermId id) const { return dictionary_.term(id); }
  std::span<const EncodedTriple> encoded() const { return triples_; }
  Triple decode(const EncodedTriple& triple) const;
  std::vector<Triple> triples() const;
  std::set<Triple> tripleSet() const;

  // RDF merge: blank labels of `other` that already occur here are renamed
  // to fresh `b<n>` labels.
  void merge(const RdfGraph& other);

  friend bool operator==(const RdfGraph& a, const RdfGraph& b) {
    return a.tripleSet() == b.tripleSet();
  }

 private:
  std::string name_;
  TermDictionary dictionary_;
  std::vector<EncodedTriple> triples_;
  std::unordered_set<EncodedTriple, EncodedTripleHash> seen_;
  std::size_t blankCounter_ = 0;
};

}  // namespace spg::rdf
