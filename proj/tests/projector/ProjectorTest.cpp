#include <gtest/gtest.h>

#include <random>

#include "Generators.h"
#include "TestData.h"
#include "spg/ontology/OntologySchema.h"
#include "spg/projector/Projector.h"
#include "spg/store/LocalStore.h"

using namespace spg;
using namespace spg::projector;
using model::PropertyValue;
using testsupport::ex1;

namespace {

const std::string kEx = "http://ex.org/";
const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

std::string stmt(const std::string& id, const std::string& s, const std::string& p,
                 const std::string& o) {
  return "<" + kEx + id + "> <" + kRdf + "type> <" + kRdf + "Statement> .\n" + "<" + kEx + id +
         "> <" + kRdf + "subject> " + s + " .\n" + "<" + kEx + id + "> <" + kRdf + "predicate> " +
         p + " .\n" + "<" + kEx + id + "> <" + kRdf + "object> " + o + " .\n";
}

ProjectionConfig lenient() {
  ProjectionConfig c;
  c.strict = false;
  return c;
}

}  // namespace

TEST(Projector, Ex1) {
  ProjectionResult r = project(ex1());
  const model::SpgGraph& g = r.graph;
  EXPECT_TRUE(r.diagnostics.empty()) << r.diagnostics.toString();
  ASSERT_EQ(g.nodeCount(), 2u);
  ASSERT_EQ(g.edgeCount(), 1u);
  const model::SpgNode* alice = g.findNode(kEx + "alice");
  const model::SpgNode* bob = g.findNode(kEx + "bob");
  ASSERT_TRUE(alice && bob);
  EXPECT_EQ(alice->label, "Person");
  EXPECT_EQ(bob->label, "Person");
  EXPECT_EQ(alice->properties.at("name"), PropertyValue::text("Alice"));
  EXPECT_TRUE(bob->properties.empty());
  const model::SpgEdge& e = g.edges().front();
  EXPECT_EQ(e.id, kEx + "st1");
  EXPECT_EQ(e.source, kEx + "alice");
  EXPECT_EQ(e.target, kEx + "bob");
  EXPECT_EQ(e.label, "knows");
  EXPECT_EQ(e.properties.at("since"), PropertyValue::integer(2019));
  EXPECT_EQ(e.properties.size(), 1u);
  EXPECT_NO_THROW(g.checkIntegrity());
}

TEST(Projector, EmptyGraph) {
  ProjectionResult r = project(rdf::RdfGraph());
  EXPECT_TRUE(r.graph.empty());
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Projector, SingleResidualTriple) {
  rdf::RdfGraph in = rdf::parseNTriples("<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .");
  ProjectionResult r = project(in);
  ASSERT_EQ(r.graph.nodeCount(), 2u);
  ASSERT_EQ(r.graph.edgeCount(), 1u);
  const model::SpgEdge& e = r.graph.edges().front();
  EXPECT_EQ(e.label, "p");
  EXPECT_EQ(e.id, kEx + "a|" + kEx + "p|" + kEx + "b|0");
  EXPECT_TRUE(e.properties.empty());
  EXPECT_EQ(r.graph.findNode(kEx + "a")->label, model::kDefaultLabel);
}

TEST(Projector, ParallelStatementsStayDistinct) {
  std::string text = stmt("s1", "<http://ex.org/a>", "<http://ex.org/knows>", "<http://ex.org/b>") +
                     stmt("s2", "<http://ex.org/a>", "<http://ex.org/knows>", "<http://ex.org/b>") +
                     "<http://ex.org/s1> <http://ex.org/since> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
                     "<http://ex.org/s2> <http://ex.org/since> \"2\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n";
  ProjectionResult r = project(rdf::parseNTriples(text));
  ASSERT_EQ(r.graph.edgeCount(), 2u);
  EXPECT_EQ(r.graph.edges()[0].id, kEx + "s1");
  EXPECT_EQ(r.graph.edges()[1].id, kEx + "s2");
  EXPECT_EQ(r.graph.edges()[1].properties.at("since"), PropertyValue::integer(2));
}

TEST(Projector, UntypedStatementWithAllComponentsIsDetected) {
  std::string text = stmt("s1", "<http://ex.org/a>", "<http://ex.org/knows>", "<http://ex.org/b>");
  text.erase(0, text.find('\n') + 1);  // drop the rdf:type line
  ProjectionResult r = project(rdf::parseNTriples(text));
  EXPECT_EQ(r.graph.edgeCount(), 1u);
  EXPECT_EQ(r.graph.nodeCount(), 2u);
}

TEST(Projector, LiteralObjectBecomesNodeProperty) {
  std::string text = stmt("s1", "<http://ex.org/a>", "<http://ex.org/age>",
                          "\"41\"^^<http://www.w3.org/2001/XMLSchema#integer>") +
                     "<http://ex.org/s1> <http://ex.org/source> \"census\" .\n";
  ProjectionResult r = project(rdf::parseNTriples(text));
  ASSERT_EQ(r.graph.nodeCount(), 1u);
  EXPECT_EQ(r.graph.edgeCount(), 0u);
  const auto& props = r.graph.findNode(kEx + "a")->properties;
  EXPECT_EQ(props.at("age"), PropertyValue::integer(41));
  EXPECT_EQ(props.at("age.source"), PropertyValue::text("census"));
}

TEST(Projector, IncompleteReificationIsAnError) {
  std::string text = "<http://ex.org/s1> <" + kRdf + "type> <" + kRdf + "Statement> .\n" +
                     "<http://ex.org/s1> <" + kRdf + "subject> <http://ex.org/a> .\n";
  rdf::RdfGraph in = rdf::parseNTriples(text);
  EXPECT_THROW(project(in), model::DiagnosticError);
  ProjectionResult r = project(in, lenient());
  EXPECT_EQ(r.diagnostics.count("incomplete-reification"), 1u);
  EXPECT_TRUE(r.diagnostics.hasErrors());
  EXPECT_EQ(r.diagnostics.entries().front().term, kEx + "s1");
  EXPECT_NE(r.diagnostics.entries().front().message.find("predicate"), std::string::npos);
  // the unusable component triple stays as residual data
  ASSERT_EQ(r.graph.edgeCount(), 1u);
  EXPECT_EQ(r.graph.edges()[0].label, "subject");
}

TEST(Projector, DuplicatedComponentIsAnError) {
  std::string text = stmt("s1", "<http://ex.org/a>", "<http://ex.org/p>", "<http://ex.org/b>") +
                     "<http://ex.org/s1> <" + kRdf + "object> <http://ex.org/c> .\n";
  ProjectionResult r = project(rdf::parseNTriples(text), lenient());
  EXPECT_EQ(r.diagnostics.count("incomplete-reification") + r.diagnostics.count("invalid-reification"),
            1u);
  EXPECT_TRUE(r.diagnostics.hasErrors());
}

TEST(Projector, NestedReification) {
  std::string text = stmt("s1", "<http://ex.org/a>", "<http://ex.org/knows>", "<http://ex.org/b>") +
                     stmt("s2", "<http://ex.org/carol>", "<http://ex.org/believes>", "<http://ex.org/s1>");
  rdf::RdfGraph in = rdf::parseNTriples(text);
  try {
    project(in);
    FAIL() << "strict projection accepted nested reification";
  } catch (const model::DiagnosticError& e) {
    EXPECT_EQ(e.diagnostics().count("nested-reification"), 1u);
  }
  ProjectionResult r = project(in, lenient());
  EXPECT_FALSE(r.diagnostics.hasErrors());
  EXPECT_EQ(r.diagnostics.count("nested-reification"), 1u);
  const model::SpgNode* s1 = r.graph.findNode(kEx + "s1");
  ASSERT_NE(s1, nullptr);
  EXPECT_EQ(s1->label, "Statement");
  EXPECT_EQ(r.graph.edgeCount(), 2u);
  EXPECT_NO_THROW(r.graph.checkIntegrity());
}

TEST(Projector, ResourceExtraIsStoredAsText) {
  std::string text = stmt("s1", "<http://ex.org/a>", "<http://ex.org/knows>", "<http://ex.org/b>") +
                     "<http://ex.org/s1> <http://ex.org/via> <http://ex.org/c> .\n";
  ProjectionResult r = project(rdf::parseNTriples(text));
  EXPECT_EQ(r.diagnostics.count("resource-extra"), 1u);
  ASSERT_EQ(r.graph.edgeCount(), 1u);
  EXPECT_EQ(r.graph.edges()[0].properties.at("via"), PropertyValue::text(kEx + "c"));
}

TEST(Projector, OntologyPicksMostSpecificLabel) {
  auto schema = ontology::loadOntology(
      testsupport::loadRdf(testsupport::dataPath("ontology.ttl")));
  std::set<std::string> types{"Agent", "Person"};
  EXPECT_EQ(choosePrimaryLabel(types, &schema), "Person");
  EXPECT_EQ(choosePrimaryLabel(types, nullptr), "Agent");
  EXPECT_EQ(choosePrimaryLabel({}, nullptr), model::kDefaultLabel);
}

TEST(Projector, StoreOverloadMatchesGraph) {
  store::LocalStore store;
  store.load(ex1(), "g", store::LoadMode::Replace);
  EXPECT_EQ(project(store, "g").graph, project(ex1()).graph);
  EXPECT_EQ(findStatements(store, "g").statements.size(), 1u);
}

TEST(Projector, FindStatementsDescribesComponents) {
  StatementScan scan = findStatements(ex1());
  ASSERT_EQ(scan.statements.size(), 1u);
  const StatementDescriptor& d = scan.statements[0];
  EXPECT_EQ(d.subject, rdf::Term::iri(kEx + "alice"));
  EXPECT_EQ(d.predicate, rdf::Term::iri(kEx + "knows"));
  EXPECT_EQ(d.object, rdf::Term::iri(kEx + "bob"));
  ASSERT_EQ(d.extras.size(), 1u);
  EXPECT_EQ(d.extras[0].predicate, rdf::Term::iri(kEx + "since"));
}

TEST(Projector, VariableNamespaceRendersQueryVariables) {
  ProjectionConfig config;
  config.variableNamespace = "var:";
  ProjectionResult r = project(testsupport::loadRdf(testsupport::dataPath("wedge.ttl"), true), config);
  EXPECT_EQ(r.graph.nodeCount(), 3u);
  EXPECT_EQ(r.graph.edgeCount(), 2u);
  EXPECT_TRUE(r.graph.hasNode("?person"));
  EXPECT_TRUE(r.graph.hasEdge("?st1"));
  EXPECT_EQ(r.graph.findNode("?org")->label, "Organization");
}

// Independent count of what should become edges: resource-object statements
// plus residual resource triples that are not rdf:type.
TEST(ProjectorProperty, EdgeConservationAndNoLeakage) {
  std::mt19937_64 rng(7);
  const rdf::ReificationVocabulary vocab;
  for (int round = 0; round < 60; ++round) {
    testsupport::ReifiedOptions o;
    o.statements = 5 + rng() % 80;
    o.entities = 3 + rng() % 30;
    o.blankNodes = round % 2;
    testsupport::ReifiedGraph gen = testsupport::generateReified(o, rng);
    rdf::RdfGraph g = gen.graph;
    // add a few residual resource triples between entities
    std::vector<rdf::Term> entities;
    for (const auto& t : g.triples()) {
      if (t.predicate.value() == vocab.subject) entities.push_back(t.object);
    }
    std::size_t residual = 0;
    for (int k = 0; k < 5; ++k) {
      if (g.add(entities[rng() % entities.size()], rdf::Term::iri(o.ns + "rel/direct"),
                entities[rng() % entities.size()])) {
        ++residual;
      }
    }
    std::size_t resourceStatements = 0;
    std::set<rdf::Term> statementNodes;
    for (const auto& t : g.triples()) {
      if (t.predicate.value() == vocab.object) {
        statementNodes.insert(t.subject);
        if (!t.object.isLiteral()) ++resourceStatements;
      }
    }

    ProjectionResult r = project(g);
    EXPECT_EQ(r.graph.edgeCount(), resourceStatements + residual);
    for (const auto& st : statementNodes) {
      EXPECT_FALSE(r.graph.hasNode(st.value())) << st.value();
    }
    for (const auto& [id, node] : r.graph.nodes()) {
      for (const auto& [key, value] : node.properties) {
        EXPECT_NE(key, "subject");
        EXPECT_NE(key, "predicate");
        EXPECT_NE(key, "object");
      }
    }
    for (const auto& e : r.graph.edges()) {
      EXPECT_FALSE(e.properties.contains("subject") || e.properties.contains("type"));
    }
    EXPECT_NO_THROW(r.graph.checkIntegrity());
  }
}

TEST(ProjectorProperty, DeterministicAndThreadInvariant) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    testsupport::ReifiedOptions o;
    o.statements = 50 + rng() % 300;
    o.blankNodes = true;
    rdf::RdfGraph g = testsupport::generateReified(o, rng).graph;
    ProjectionResult base = project(g);
    for (unsigned threads : {1u, 2u, 4u, 7u}) {
      ProjectionConfig c;
      c.threads = threads;
      ProjectionResult r = project(g, c);
      EXPECT_EQ(r.graph, base.graph);
      EXPECT_EQ(r.graph.edges(), base.graph.edges());
      EXPECT_EQ(r.diagnostics.entries(), base.diagnostics.entries());
    }
    // insertion order of the input must not matter either
    std::vector<rdf::Triple> triples = g.triples();
    std::shuffle(triples.begin(), triples.end(), rng);
    rdf::RdfGraph shuffled;
    for (const auto& t : triples) shuffled.add(t);
    EXPECT_EQ(project(shuffled).graph.edges(), base.graph.edges());
  }
}
