#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "Generators.h"
#include "TestData.h"
#include "spg/store/LocalStore.h"

using namespace spg;
using namespace spg::store;
using spg::testsupport::ex1;

namespace {

const std::string kEx = "http://ex.org/";

std::vector<TriplePattern> patterns(std::initializer_list<std::string_view> texts) {
  PrefixMap prefixes = defaultPrefixes();
  prefixes["ex"] = kEx;
  std::vector<TriplePattern> out;
  for (auto t : texts) out.push_back(parseTriplePattern(t, prefixes));
  return out;
}

// Nested-loop join over the plain triple list; no index involved.
BindingTable bruteForce(const rdf::RdfGraph& graph, const std::vector<TriplePattern>& bgp) {
  std::vector<std::string> vars;
  for (const auto& p : bgp) {
    for (auto& v : p.variables()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
  }
  std::vector<rdf::Triple> triples = graph.triples();
  std::set<std::vector<rdf::Term>> rows;
  std::map<std::string, rdf::Term> binding;
  auto unify = [&](const PatternTerm& pt, const rdf::Term& t, std::vector<std::string>& added) {
    if (auto* term = std::get_if<rdf::Term>(&pt)) return *term == t;
    const std::string& name = std::get<Variable>(pt).name;
    auto it = binding.find(name);
    if (it != binding.end()) return it->second == t;
    binding.emplace(name, t);
    added.push_back(name);
    return true;
  };
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == bgp.size()) {
      std::vector<rdf::Term> row;
      for (auto& v : vars) row.push_back(binding.at(v));
      rows.insert(row);
      return;
    }
    for (const auto& t : triples) {
      std::vector<std::string> added;
      if (unify(bgp[i].subject, t.subject, added) && unify(bgp[i].predicate, t.predicate, added) &&
          unify(bgp[i].object, t.object, added)) {
        step(i + 1);
      }
      for (auto& a : added) binding.erase(a);
    }
  };
  step(0);
  BindingTable out;
  out.variables = vars;
  for (auto& r : rows) out.rows.push_back(r);
  return out;
}

std::set<std::vector<rdf::Term>> rowSet(const BindingTable& table,
                                        const std::vector<std::string>& order) {
  std::set<std::vector<rdf::Term>> out;
  for (const auto& row : table.rows) {
    std::vector<rdf::Term> r;
    for (auto& v : order) r.push_back(row[*table.column(v)]);
    out.insert(r);
  }
  return out;
}

}  // namespace

TEST(LocalStore, LoadEx1) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  EXPECT_TRUE(store.contains("g"));
  EXPECT_EQ(store.tripleCount("g"), 8u);
  EXPECT_EQ(store.graphNames(), std::vector<std::string>{"g"});
}

TEST(LocalStore, EmptyGraphIsStored) {
  LocalStore store;
  store.load(rdf::RdfGraph(), "empty", LoadMode::Replace);
  EXPECT_TRUE(store.contains("empty"));
  EXPECT_EQ(store.tripleCount("empty"), 0u);
  EXPECT_TRUE(store.match("empty", patterns({"?s ?p ?o"})).rows.empty());
}

TEST(LocalStore, MergeIsIdempotentAndReplaceOverwrites) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Merge);
  store.load(ex1(), "g", LoadMode::Merge);
  EXPECT_EQ(store.tripleCount("g"), 8u);
  store.load(rdf::parseNTriples("<http://ex.org/x> <http://ex.org/p> <http://ex.org/y> ."), "g",
             LoadMode::Merge);
  EXPECT_EQ(store.tripleCount("g"), 9u);
  store.load(rdf::RdfGraph(), "g", LoadMode::Replace);
  EXPECT_EQ(store.tripleCount("g"), 0u);
}

TEST(LocalStore, UnknownGraphAndDrop) {
  LocalStore store;
  EXPECT_THROW(store.tripleCount("nope"), UnknownGraphError);
  EXPECT_THROW(store.match("nope", patterns({"?s ?p ?o"})), UnknownGraphError);
  store.load(ex1(), "g", LoadMode::Replace);
  EXPECT_TRUE(store.drop("g"));
  EXPECT_FALSE(store.drop("g"));
  EXPECT_FALSE(store.contains("g"));
}

TEST(LocalStore, SnapshotSurvivesReplace) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  auto snap = store.snapshot("g");
  store.load(rdf::RdfGraph(), "g", LoadMode::Replace);
  EXPECT_EQ(snap->size(), 8u);
}

TEST(Bgp, StatementSubjects) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  BindingTable t = store.match("g", patterns({"?st rdf:subject ?u"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][*t.column("st")], rdf::Term::iri(kEx + "st1"));
  EXPECT_EQ(t.rows[0][*t.column("u")], rdf::Term::iri(kEx + "alice"));
}

TEST(Bgp, JoinOverStatementComponents) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  BindingTable t = store.match("g", patterns({"?st rdf:subject ?u", "?st rdf:predicate ?p",
                                              "?st rdf:object ?v", "?st ex:since ?since"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][*t.column("p")], rdf::Term::iri(kEx + "knows"));
  EXPECT_EQ(t.rows[0][*t.column("v")], rdf::Term::iri(kEx + "bob"));
  EXPECT_EQ(t.rows[0][*t.column("since")].value(), "2019");
}

TEST(Bgp, GroundPatternIsMembershipTest) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  BindingTable yes = store.match("g", patterns({"ex:alice rdf:type ex:Person"}));
  EXPECT_EQ(yes.rows.size(), 1u);
  EXPECT_TRUE(yes.variables.empty());
  EXPECT_TRUE(store.match("g", patterns({"ex:alice rdf:type ex:Robot"})).rows.empty());
}

TEST(Bgp, NoMatchAndRepeatedVariable) {
  LocalStore store;
  store.load(rdf::parseNTriples("<http://ex.org/a> <http://ex.org/p> <http://ex.org/a> .\n"
                                "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"),
             "g", LoadMode::Replace);
  EXPECT_EQ(store.match("g", patterns({"?x ex:p ?x"})).rows.size(), 1u);
  EXPECT_TRUE(store.match("g", patterns({"?x ex:q ?y"})).rows.empty());
}

TEST(Bgp, MalformedPatternsRejected) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  EXPECT_THROW(store.match("g", {}), std::invalid_argument);
  EXPECT_THROW(parseTriplePattern("?s ?p", defaultPrefixes()), std::invalid_argument);
  EXPECT_THROW(parseTriplePattern("?s nope:p ?o", defaultPrefixes()), std::invalid_argument);
  EXPECT_THROW(parseTriplePattern("\"lit\" ?p ?o", defaultPrefixes()), std::invalid_argument);
}

TEST(Bgp, TsvOutput) {
  LocalStore store;
  store.load(ex1(), "g", LoadMode::Replace);
  BindingTable t = store.match("g", patterns({"?st rdf:subject ?u"}));
  EXPECT_EQ(t.toTsv(), "?st\t?u\n<http://ex.org/st1>\t<http://ex.org/alice>\n");
}

TEST(StoreProperty, IndexLookupsAgreeWithLinearScan) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 30; ++round) {
    LocalStore store;
    store.load(testsupport::randomGraph(80, 12, rng), "g", LoadMode::Replace);
    const IndexedGraph& ig = store.indexed("g");
    const rdf::RdfGraph& g = ig.graph();
    for (auto order : {IndexedGraph::Order::Spo, IndexedGraph::Order::Pos, IndexedGraph::Order::Osp}) {
      EXPECT_EQ(ig.index(order).size(), g.size());
    }
    std::vector<rdf::Triple> all = g.triples();
    for (int q = 0; q < 40; ++q) {
      const rdf::Triple& pick = all[rng() % all.size()];
      std::optional<rdf::Term> s, p, o;
      if (rng() % 2) s = pick.subject;
      if (rng() % 2) p = pick.predicate;
      if (rng() % 2) o = pick.object;
      std::set<rdf::Triple> expected;
      for (const auto& t : all) {
        if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) {
          expected.insert(t);
        }
      }
      auto found = store.find("g", s, p, o);
      EXPECT_EQ(std::set<rdf::Triple>(found.begin(), found.end()), expected);
      EXPECT_EQ(found.size(), expected.size());
    }
  }
}

TEST(StoreProperty, BgpMatchesBruteForce) {
  std::mt19937_64 rng(99);
  const std::vector<std::string> names{"a", "b", "c"};
  for (int round = 0; round < 200; ++round) {
    rdf::RdfGraph g = testsupport::randomGraph(1 + rng() % 50, 8, rng);
    LocalStore store;
    store.load(g, "g", LoadMode::Replace);
    std::vector<rdf::Triple> all = g.triples();
    std::vector<TriplePattern> bgp;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      const rdf::Triple& t = all[rng() % all.size()];
      auto pick = [&](const rdf::Term& term, bool allowed) -> PatternTerm {
        if (allowed && rng() % 2) return Variable{names[rng() % names.size()]};
        return term;
      };
      bgp.push_back({pick(t.subject, true), pick(t.predicate, true), pick(t.object, true)});
    }
    BindingTable expected = bruteForce(g, bgp);
    BindingTable actual = store.match("g", bgp);
    std::set<std::string> vars(actual.variables.begin(), actual.variables.end());
    ASSERT_EQ(vars, std::set<std::string>(expected.variables.begin(), expected.variables.end()));
    EXPECT_EQ(rowSet(actual, expected.variables), rowSet(expected, expected.variables));
    EXPECT_EQ(actual.rows.size(), expected.rows.size());
  }
}
