#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "TestData.h"
#include "json.hpp"
#include "spg/cli/Cli.h"

using namespace spg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "spg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::runMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return testsupport::dataPath(name); }
std::string fixture(const std::string& name) { return testsupport::testDataPath(name); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("spg-cli-" + std::to_string(::getpid()) + "-" +
                                                  std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, ConvertEx1MatchesGolden) {
  Outcome r = run({"convert", "-i", data("ex1.nt")});
  EXPECT_EQ(r.code, cli::exit_code::kOk) << r.err;
  EXPECT_EQ(r.out, testsupport::slurp(fixture("golden/ex1.gdf")));
}

TEST(Cli, ConvertToFileAndThreads) {
  TempDir dir;
  Outcome r = run({"convert", "-i", data("ex1.nt"), "-o", dir.file("out.gdf"), "--threads", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(testsupport::slurp(dir.file("out.gdf")), testsupport::slurp(fixture("golden/ex1.gdf")));
}

TEST(Cli, MultipleInputsMerge) {
  TempDir dir;
  write(dir.file("extra.nt"), "<http://ex.org/bob> <http://ex.org/name> \"Bob\" .\n");
  Outcome r = run({"convert", "-i", data("ex1.nt"), "-i", dir.file("extra.nt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("http://ex.org/bob,Person,Bob"), std::string::npos);
  Outcome named = run({"convert", "--keep-names", "-i", data("ex1.nt"), "-i", dir.file("extra.nt")});
  EXPECT_EQ(named.out, r.out);
}

TEST(Cli, TurtleInputAndFormatOverride) {
  TempDir dir;
  write(dir.file("g.txt"), "@prefix ex: <http://ex.org/> . ex:a ex:p ex:b .\n");
  EXPECT_EQ(run({"convert", "-i", dir.file("g.txt")}).code, cli::exit_code::kUsage);
  Outcome r = run({"convert", "-i", dir.file("g.txt"), "--format", "turtle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("http://ex.org/a,http://ex.org/b,true,p"), std::string::npos);
}

TEST(Cli, ParseErrorExitsOneWithLocation) {
  TempDir dir;
  write(dir.file("bad.nt"), "<http://ex.org/a> <http://ex.org/p> \"x\"\n");
  Outcome r = run({"convert", "-i", dir.file("bad.nt")});
  EXPECT_EQ(r.code, cli::exit_code::kFailure);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_EQ(run({"convert", "-i", dir.file("missing.nt")}).code, cli::exit_code::kFailure);
}

TEST(Cli, StrictProjectionErrorFailsLenientSucceeds) {
  TempDir dir;
  write(dir.file("bad.nt"),
        "<http://ex.org/s1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/a> .\n"
        "<http://ex.org/s1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
        "<http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .\n");
  Outcome strict = run({"convert", "-i", dir.file("bad.nt")});
  EXPECT_EQ(strict.code, cli::exit_code::kFailure);
  EXPECT_NE(strict.err.find("incomplete-reification"), std::string::npos);
  Outcome lenient = run({"convert", "--lenient", "-i", dir.file("bad.nt")});
  EXPECT_EQ(lenient.code, 0);
  EXPECT_NE(lenient.err.find("incomplete-reification"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"convert"}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"convert", "--bogus"}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"convert", "-i", data("ex1.nt"), "--strict", "--lenient"}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"stats", "-i", data("ex1.nt"), "--view", "sideways"}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"validate", "-i", data("ex1.nt")}).code, cli::exit_code::kUsage);
  EXPECT_EQ(run({"convert", "-i", data("ex1.nt"), "--threads", "0"}).code, cli::exit_code::kUsage);
}

TEST(Cli, HelpExitsZero) {
  Outcome top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  EXPECT_NE(top.out.find("convert"), std::string::npos);
  Outcome sub = run({"stats", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--view"), std::string::npos);
}

TEST(Cli, ValidateCleanAndFaulty) {
  Outcome clean = run({"validate", "-i", data("ex1.nt"), "--ontology", data("ontology.ttl")});
  EXPECT_EQ(clean.code, 0) << clean.err;
  Outcome bad = run({"validate", "-i", fixture("validator/range_violation.nt"), "--ontology", data("ontology.ttl")});
  EXPECT_EQ(bad.code, cli::exit_code::kViolations);
  EXPECT_EQ(bad.out.substr(0, bad.out.find('\t')), "RangeViolation");
}

TEST(Cli, ValidateJsonReport) {
  TempDir dir;
  Outcome r = run({"validate", "-i", fixture("validator/datatype_mismatch.nt"), "--ontology",
               data("ontology.ttl"), "--lenient", "--json", dir.file("report.json")});
  EXPECT_EQ(r.code, cli::exit_code::kViolations);
  auto doc = nlohmann::json::parse(testsupport::slurp(dir.file("report.json")));
  EXPECT_EQ(doc["mode"], "lenient");
  EXPECT_EQ(doc["counts"]["DatatypeMismatch"], 1);
  EXPECT_EQ(doc["violations"][0]["element"], "http://ex.org/st1");
}

TEST(Cli, ConvertWithOntologyGatesOnStrictMode) {
  std::string faulty = fixture("validator/domain_violation.nt");
  EXPECT_EQ(run({"convert", "-i", faulty, "--ontology", data("ontology.ttl")}).code,
            cli::exit_code::kViolations);
  Outcome lenient = run({"convert", "-i", faulty, "--ontology", data("ontology.ttl"), "--lenient"});
  EXPECT_EQ(lenient.code, 0);
  EXPECT_NE(lenient.out.find("edgedef>"), std::string::npos);
}

TEST(Cli, StatsEx1) {
  Outcome r = run({"stats", "-i", data("ex1.nt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# rdf degree histogram\ndegree,count\n1,4\n2,2\n3,1\n5,1\n"), std::string::npos);
  EXPECT_NE(r.out.find("# spg degree histogram\ndegree,count\n1,2\n"), std::string::npos);
  EXPECT_NE(r.out.find("node_ratio=4.0"), std::string::npos);
  EXPECT_NE(r.out.find("edge_ratio=8.0"), std::string::npos);
  Outcome spgOnly = run({"stats", "-i", data("ex1.nt"), "--view", "spg"});
  EXPECT_EQ(spgOnly.out.find("# rdf"), std::string::npos);
}

TEST(Cli, StatsToFilesAndJson) {
  TempDir dir;
  Outcome r = run({"stats", "-i", data("ex1.nt"), "-o", dir.file("ex1"), "--json", dir.file("m.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testsupport::slurp(dir.file("ex1-rdf.csv")), "degree,count\n1,4\n2,2\n3,1\n5,1\n");
  EXPECT_EQ(testsupport::slurp(dir.file("ex1-spg.csv")), "degree,count\n1,2\n");
  EXPECT_NE(testsupport::slurp(dir.file("ex1-metrics.txt")).find("rdf_triples=8"), std::string::npos);
  auto doc = nlohmann::json::parse(testsupport::slurp(dir.file("m.json")));
  EXPECT_EQ(doc["metrics"]["spg_edges"], 1);
  EXPECT_EQ(doc["rdf"]["histogram"].size(), 4u);
}

TEST(Cli, QueryCompactWedge) {
  Outcome r = run({"query-compact", "-i", data("wedge.ttl")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, testsupport::slurp(fixture("golden/wedge.gdf")));
}

TEST(Cli, MappingFile) {
  Outcome r = run({"convert", "-i", data("ex1.nt"), "--mapping", data("ex1.mapping")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("http://ex.org/alice,http://ex.org/bob,true,knows,2019"), std::string::npos);
  TempDir dir;
  write(dir.file("syntax.mapping"), "pattern = ?s ?p ?o\nrole.s = bogus\n");
  EXPECT_EQ(run({"convert", "-i", data("ex1.nt"), "--mapping", dir.file("syntax.mapping")}).code,
            cli::exit_code::kUsage);
  // A well-formed mapping that cannot be applied is a projection error.
  write(dir.file("unbound.mapping"), "pattern = ?s ?p ?o\nrole.z = node-id\n");
  EXPECT_EQ(run({"convert", "-i", data("ex1.nt"), "--mapping", dir.file("unbound.mapping")}).code,
            cli::exit_code::kFailure);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
  TempDir dir;
  write(dir.file("run.conf"), "# comment\ninput = " + data("ex1.nt") + "\nmode = lenient\nthreads = 3\n"
                              "output = " + dir.file("from-config.gdf") + "\n");
  Outcome r = run({"convert", "--config", dir.file("run.conf")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testsupport::slurp(dir.file("from-config.gdf")), testsupport::slurp(fixture("golden/ex1.gdf")));
  Outcome flag = run({"convert", "--config", dir.file("run.conf"), "-o", dir.file("from-flag.gdf")});
  EXPECT_EQ(flag.code, 0) << flag.err;
  EXPECT_TRUE(fs::exists(dir.file("from-flag.gdf")));

  write(dir.file("inline.conf"), "input = " + data("ex1.nt") + "\nprefix.ex = http://ex.org/\n"
                                 "pattern = ?st rdf:subject ?u\npattern = ?st rdf:object ?v\n"
                                 "role.u = edge-source\nrole.v = edge-target\n");
  Outcome inlineMapping = run({"convert", "--config", dir.file("inline.conf")});
  EXPECT_EQ(inlineMapping.code, 0) << inlineMapping.err;
  EXPECT_NE(inlineMapping.out.find(",true,edge"), std::string::npos);

  write(dir.file("broken.conf"), "input\n");
  EXPECT_EQ(run({"convert", "--config", dir.file("broken.conf")}).code, cli::exit_code::kUsage);
  write(dir.file("unknown.conf"), "colour = blue\n");
  EXPECT_EQ(run({"convert", "--config", dir.file("unknown.conf"), "-i", data("ex1.nt")}).code,
            cli::exit_code::kUsage);
}

TEST(Cli, VocabularyOverride) {
  TempDir dir;
  write(dir.file("g.nt"),
        "<http://ex.org/s> <http://v.example/subj> <http://ex.org/a> .\n"
        "<http://ex.org/s> <http://v.example/pred> <http://ex.org/p> .\n"
        "<http://ex.org/s> <http://v.example/obj> <http://ex.org/b> .\n");
  write(dir.file("v.conf"), "vocab.subject = http://v.example/subj\nvocab.predicate = http://v.example/pred\n"
                            "vocab.object = http://v.example/obj\n");
  Outcome r = run({"convert", "--config", dir.file("v.conf"), "-i", dir.file("g.nt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("http://ex.org/a,http://ex.org/b,true,p\n"), std::string::npos);
}

TEST(Cli, ValidateRelabeledFault) {
  Outcome r = run({"validate", "-i", fixture("cli/relabeled.nt"), "--ontology", data("ontology.ttl")});
  EXPECT_EQ(r.code, cli::exit_code::kViolations);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_NE(r.out.find("UnknownLabel\thttp://ex.org/alice"), std::string::npos);
  EXPECT_NE(r.out.find("DomainViolation\thttp://ex.org/st1"), std::string::npos);
}

TEST(Cli, StatsOnEmptyInput) {
  Outcome r = run({"stats", "-i", fixture("cli/empty.nt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# rdf degree histogram\ndegree,count\n#"), std::string::npos);
  EXPECT_NE(r.out.find("edge_ratio=none"), std::string::npos);
}

TEST(Cli, QueryCompactEdgeCases) {
  Outcome plain = run({"query-compact", "-i", data("ex1.nt")});
  EXPECT_EQ(plain.code, 0);
  EXPECT_EQ(plain.out, testsupport::slurp(fixture("golden/ex1.gdf")));
  EXPECT_FALSE(plain.err.empty());
  TempDir dir;
  write(dir.file("broken.ttl"),
        "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n?st a rdf:Statement ; rdf:subject ?s .\n");
  EXPECT_EQ(run({"query-compact", "-i", dir.file("broken.ttl")}).code, cli::exit_code::kFailure);
}

TEST(Cli, IdenticalInvocationsAreByteIdentical) {
  for (const char* sub : {"convert", "stats"}) {
    Outcome a = run({sub, "-i", fixture("validator/clean_full.nt"), "--threads", "1"});
    Outcome b = run({sub, "-i", fixture("validator/clean_full.nt"), "--threads", "6"});
    EXPECT_EQ(a.out, b.out) << sub;
    EXPECT_EQ(a.code, 0);
  }
}

// The installed binary behaves like the in-process entry point.
TEST(CliBinary, ExitCodesFromProcess) {
  auto status = [](const std::string& args) {
    int raw = std::system((std::string(SPG_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("--help"), 0);
  EXPECT_EQ(status(""), 64);
  EXPECT_EQ(status("convert -i " + data("ex1.nt")), 0);
  EXPECT_EQ(status("convert -i /nonexistent/file.nt"), 1);
  EXPECT_EQ(status("validate -i " + fixture("validator/unknown_label.nt") + " --ontology " + data("ontology.ttl")),
            2);
}
