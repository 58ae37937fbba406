#include <gtest/gtest.h>

#include <sstream>

#include "TestData.h"
#include "spg/projector/Mapping.h"
#include "spg/store/LocalStore.h"

using namespace spg;
using namespace spg::projector;

namespace {

MappingSpec parse(const std::string& text) {
  std::istringstream in(text);
  return mappingFromEntries(util::readKeyValues(in));
}

store::LocalStore ex1Store() {
  store::LocalStore s;
  s.load(testsupport::ex1(), "g", store::LoadMode::Replace);
  return s;
}

}  // namespace

TEST(Mapping, Ex1MappingFile) {
  MappingSpec spec = readMappingFile(testsupport::dataPath("ex1.mapping"));
  EXPECT_EQ(spec.patterns.size(), 5u);
  ProjectionResult r = projectWithMapping(ex1Store(), "g", spec);
  ASSERT_EQ(r.graph.nodeCount(), 2u);
  ASSERT_EQ(r.graph.edgeCount(), 1u);
  const model::SpgEdge& e = r.graph.edges()[0];
  EXPECT_EQ(e.id, "http://ex.org/st1");
  EXPECT_EQ(e.label, "knows");
  EXPECT_EQ(e.properties.at("since"), model::PropertyValue::integer(2019));
}

TEST(Mapping, NodeLabelsAndProperties) {
  MappingSpec spec = parse(
      "prefix.ex = http://ex.org/\n"
      "pattern = ?x rdf:type ?t\n"
      "pattern = ?x ex:name ?n\n"
      "role.x = node-id\n"
      "role.t = node-label(?x)\n"
      "role.n = node-property(name, ?x)\n");
  EXPECT_FALSE(spec.hasEdges());
  ProjectionResult r = projectWithMapping(ex1Store(), "g", spec);
  ASSERT_EQ(r.graph.nodeCount(), 1u);
  const model::SpgNode& alice = r.graph.nodes().begin()->second;
  EXPECT_EQ(alice.label, "Person");
  EXPECT_EQ(alice.properties.at("name"), model::PropertyValue::text("Alice"));
  EXPECT_EQ(r.graph.edgeCount(), 0u);
}

TEST(Mapping, DefaultEdgeLabelAndSynthesizedIds) {
  MappingSpec spec = parse(
      "pattern = ?st rdf:subject ?u\n"
      "pattern = ?st rdf:object ?v\n"
      "role.u = edge-source\n"
      "role.v = edge-target\n");
  ProjectionResult r = projectWithMapping(ex1Store(), "g", spec);
  ASSERT_EQ(r.graph.edgeCount(), 1u);
  EXPECT_EQ(r.graph.edges()[0].label, "edge");
  EXPECT_EQ(r.graph.edges()[0].id, "http://ex.org/alice|edge|http://ex.org/bob|0");
}

TEST(Mapping, Errors) {
  EXPECT_THROW(parseRoles("node-id(x)"), MappingError);
  EXPECT_THROW(parseRoles("bogus"), MappingError);
  EXPECT_THROW(parseRoles("edge-property()"), MappingError);
  EXPECT_THROW(parse("pattern = ?s ?p\n"), MappingError);
  EXPECT_THROW(parse("role.u = edge-source\npattern = ?u ?p ?o\n").validate(), MappingError);
  EXPECT_THROW(parse("pattern = ?u ?p ?o\nrole.p = node-label(?u)\n").validate(), MappingError);
  MappingSpec unbound = parse("pattern = ?u ?p ?o\nrole.z = node-id\n");
  EXPECT_THROW(projectWithMapping(ex1Store(), "g", unbound), MappingError);
  EXPECT_THROW(projectWithMapping(ex1Store(), "g", {}, parse("role.z = node-id\n"), true), MappingError);
}

TEST(Mapping, LiteralNodeIdIsRejected) {
  MappingSpec spec = parse("prefix.ex = http://ex.org/\npattern = ?x ex:name ?n\nrole.n = node-id\n");
  EXPECT_THROW(projectWithMapping(ex1Store(), "g", spec), model::DiagnosticError);
  ProjectionResult r = projectWithMapping(ex1Store(), "g", spec, false);
  EXPECT_EQ(r.diagnostics.count("literal-node-id"), 1u);
  EXPECT_TRUE(r.graph.empty());
}

TEST(Mapping, RoleParsing) {
  auto roles = parseRoles("node-id, node-property(age, ?p), edge-property(w)");
  ASSERT_EQ(roles.size(), 3u);
  EXPECT_EQ(roles[0].kind, RoleKind::NodeId);
  EXPECT_EQ(roles[1].kind, RoleKind::NodeProperty);
  EXPECT_EQ(roles[1].key, "age");
  EXPECT_EQ(roles[1].owner, "p");
  EXPECT_EQ(roles[2].key, "w");
}
