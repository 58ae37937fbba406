#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "Generators.h"
#include "TestData.h"
#include "spg/rdf/Parsers.h"
#include "spg/rdf/Vocabulary.h"

using namespace spg::rdf;
using spg::testsupport::ex1;

namespace {

ParseError parseFailure(std::string_view text) {
  try {
    parseNTriples(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return ParseError(0, 0, "none");
}

}  // namespace

TEST(NTriples, MinimalLine) {
  RdfGraph g = parseNTriples("<http://ex.org/a> <http://ex.org/p> \"x\" .");
  ASSERT_EQ(g.size(), 1u);
  Triple t = g.triples().front();
  EXPECT_EQ(t.object, Term::literal("x"));
  EXPECT_EQ(t.object.datatype(), xsd::kString);
  EXPECT_TRUE(t.object.language().empty());
}

TEST(NTriples, EmptyInput) {
  EXPECT_TRUE(parseNTriples("").empty());
  EXPECT_EQ(serializeNTriples(RdfGraph()), "");
}

TEST(NTriples, Ex1FixtureCounts) {
  RdfGraph g = ex1();
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(g.distinctSubjectCount(), 3u);
}

TEST(NTriples, StreamAndStringAgree) {
  std::string text = serializeNTriples(ex1());
  std::istringstream in(text);
  EXPECT_EQ(parseNTriples(in), parseNTriples(text));
}

TEST(NTriples, EscapesDecodedInLiteralsAndIris) {
  RdfGraph g = parseNTriples(
      "<http://ex.org/\\u0061> <http://ex.org/p> \"l1\\nl2\\t\\\"q\\\" \\\\ \\u00e9 \\U0001F600\" .");
  Triple t = g.triples().front();
  EXPECT_EQ(t.subject.value(), "http://ex.org/a");
  EXPECT_EQ(t.object.value(), "l1\nl2\t\"q\" \\ \xC3\xA9 \xF0\x9F\x98\x80");
}

TEST(NTriples, DuplicatesCollapse) {
  RdfGraph g = parseNTriples("<http://ex.org/a> <http://ex.org/p> _:b .\n<http://ex.org/a> <http://ex.org/p> _:b .\n");
  EXPECT_EQ(g.size(), 1u);
}

TEST(NTriples, ErrorsCarryLineAndColumn) {
  ParseError e = parseFailure("<http://ex.org/a> <http://ex.org/p> \"x\" .\n<http://ex.org/a> <http://ex.org/p> \"y\"\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_GT(e.column(), 0u);
  EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  EXPECT_NE(e.reason().find("'.'"), std::string::npos);
}

TEST(NTriples, ErrorKinds) {
  EXPECT_NE(parseFailure("<http://ex.org/a <http://ex.org/p> \"x\" .").reason().find("IRI"), std::string::npos);
  EXPECT_NE(parseFailure("<http://ex.org/a> <http://ex.org/p> \"x .").reason().find("unterminated"),
            std::string::npos);
  EXPECT_NE(parseFailure("<http://ex.org/a> \"p\" \"x\" .").reason().find("predicate"), std::string::npos);
  EXPECT_NE(parseFailure("<http://ex.org/a> _:p \"x\" .").reason().find("predicate"), std::string::npos);
  EXPECT_NE(parseFailure("<http://ex.org/a> <http://ex.org/p> \"\\x\" .").reason().find("escape"),
            std::string::npos);
}

TEST(NTriples, SerializeSortsAndEscapes) {
  RdfGraph g;
  g.add(Term::iri("http://ex.org/b"), Term::iri("http://ex.org/p"), Term::literal("q\"uote"));
  g.add(Term::iri("http://ex.org/a"), Term::iri("http://ex.org/p"), Term::literal("x"));
  std::string out = serializeNTriples(g);
  EXPECT_EQ(out,
            "<http://ex.org/a> <http://ex.org/p> \"x\" .\n"
            "<http://ex.org/b> <http://ex.org/p> \"q\\\"uote\" .\n");
}

TEST(NTriples, VariablesOnlyWhenEnabled) {
  EXPECT_THROW(parseNTriples("?s <http://ex.org/p> ?o ."), ParseError);
  ParseOptions options;
  options.allowVariables = true;
  RdfGraph g = parseNTriples("?s <http://ex.org/p> ?o .", options);
  EXPECT_EQ(g.triples().front().subject, Term::iri("var:s"));
}

// Round trip law over generated graphs, including awkward literal text.
TEST(NTriplesProperty, SerializeParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    spg::testsupport::ReifiedOptions o;
    o.statements = 20;
    o.entities = 10;
    o.blankNodes = true;
    RdfGraph g = spg::testsupport::generateReified(o, rng).graph;
    std::string text = serializeNTriples(g);
    RdfGraph back = parseNTriples(text);
    ASSERT_EQ(back, g);
    EXPECT_EQ(serializeNTriples(back), text);
  }
}

TEST(NTriplesProperty, LineOrderDoesNotMatter) {
  std::string text = serializeNTriples(ex1());
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string shuffled;
    for (const auto& l : lines) shuffled += l + "\n";
    EXPECT_EQ(parseNTriples(shuffled), ex1());
  }
}

TEST(NTriplesProperty, ArbitraryBytesNeverCrash) {
  std::mt19937_64 rng(5);
  const std::string alphabet = "<>\"\\_:.?@^# \n\tabcxyz019\xC3\xA9\xFF";
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    std::size_t n = rng() % 60;
    for (std::size_t k = 0; k < n; ++k) text += alphabet[rng() % alphabet.size()];
    try {
      parseNTriples(text);
    } catch (const ParseError& e) {
      EXPECT_GT(e.line(), 0u);
    }
  }
}
