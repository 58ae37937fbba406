#include "spg/cli/Cli.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spg/analytics/Analytics.h"
#include "spg/gdf/Gdf.h"
#include "spg/ontology/Validator.h"
#include "spg/projector/Projector.h"
#include "spg/rdf/Parsers.h"
#include "spg/store/LocalStore.h"

namespace spg::cli {

namespace {

constexpr const char* kBatchGraph = "batch";

// Signals an error already reported to the error stream.
struct Failure {
  int code;
};

InputFormat parseFormat(const std::string& text) {
  if (text == "ntriples") return InputFormat::NTriples;
  if (text == "turtle") return InputFormat::Turtle;
  if (text == "auto") return InputFormat::Auto;
  throw UsageError("unknown format '" + text + "' (expected ntriples, turtle or auto)");
}

StatsView parseView(const std::string& text) {
  if (text == "rdf") return StatsView::Rdf;
  if (text == "spg") return StatsView::Spg;
  if (text == "both") return StatsView::Both;
  throw UsageError("unknown view '" + text + "' (expected rdf, spg or both)");
}

bool parseBool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw UsageError("config key '" + key + "' expects true or false, got '" + text + "'");
}

unsigned parseThreads(const std::string& text) {
  try {
    std::size_t used = 0;
    unsigned long n = std::stoul(text, &used);
    if (used == text.size() && n >= 1 && n <= 1024) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  throw UsageError("threads must be an integer between 1 and 1024, got '" + text + "'");
}

projector::MappingSpec loadMapping(const std::string& path) {
  try {
    return projector::readMappingFile(path);
  } catch (const std::exception& e) {
    throw UsageError("mapping '" + path + "': " + e.what());
  }
}

rdf::RdfGraph parseFile(const std::string& path, InputFormat format, bool allowVariables,
                        std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    throw Failure{exit_code::kFailure};
  }
  rdf::ParseOptions options;
  options.graphName = path;
  options.allowVariables = allowVariables;
  try {
    return resolveFormat(path, format) == InputFormat::Turtle ? rdf::parseTurtle(in, options)
                                                              : rdf::parseNTriples(in, options);
  } catch (const rdf::ParseError& e) {
    err << path << ": " << e.what() << '\n';
    throw Failure{exit_code::kFailure};
  }
}

// Loads every input into the store and merges them into the batch graph.
std::shared_ptr<const rdf::RdfGraph> loadInputs(const RunConfig& config, store::LocalStore& store,
                                                bool allowVariables, std::ostream& err) {
  if (config.inputs.empty()) throw UsageError("at least one --input is required");
  bool first = true;
  for (const auto& path : config.inputs) {
    rdf::RdfGraph graph = parseFile(path, config.format, allowVariables, err);
    if (config.keepNames) store.load(graph, path, store::LoadMode::Replace);
    store.load(std::move(graph), kBatchGraph, first ? store::LoadMode::Replace : store::LoadMode::Merge);
    first = false;
  }
  if (config.keepNames) {
    for (const auto& name : store.graphNames()) {
      err << "note: named graph '" << name << "' holds " << store.tripleCount(name)
          << " triples\n";
    }
  }
  return store.snapshot(kBatchGraph);
}

void reportDiagnostics(const model::Diagnostics& diagnostics, std::ostream& err) {
  err << diagnostics.toString();
}

model::SpgGraph projectBatch(const RunConfig& config, const store::LocalStore& store,
                             const ontology::OntologySchema* schema, std::ostream& err) {
  try {
    projector::ProjectionResult result;
    if (config.mapping) {
      result = projector::projectWithMapping(store, kBatchGraph, *config.mapping, config.strict);
    } else {
      projector::ProjectionConfig pc;
      pc.vocabulary = config.vocabulary;
      pc.strict = config.strict;
      pc.ontology = schema;
      pc.threads = config.threads;
      result = projector::project(store, kBatchGraph, pc);
    }
    reportDiagnostics(result.diagnostics, err);
    return std::move(result.graph);
  } catch (const model::DiagnosticError& e) {
    reportDiagnostics(e.diagnostics(), err);
    err << "error: projection failed\n";
  } catch (const projector::MappingError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  throw Failure{exit_code::kFailure};
}

std::optional<ontology::OntologySchema> loadSchema(const RunConfig& config, std::ostream& err) {
  if (!config.ontology) return std::nullopt;
  return ontology::loadOntology(parseFile(*config.ontology, InputFormat::Auto, false, err));
}

// Runs `body` against the output file (or `out` when none is configured).
template <typename Body>
void withOutput(const std::optional<std::string>& path, std::ostream& out, std::ostream& err,
                Body&& body) {
  if (!path || *path == "-") {
    body(out);
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << *path << "'\n";
    throw Failure{exit_code::kFailure};
  }
  body(file);
  if (!file) {
    err << "error: write to '" << *path << "' failed\n";
    throw Failure{exit_code::kFailure};
  }
}

void writeGraph(const model::SpgGraph& graph, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  model::Diagnostics diagnostics;
  withOutput(config.output, out, err, [&](std::ostream& o) { gdf::writeGdf(graph, o, &diagnostics); });
  reportDiagnostics(diagnostics, err);
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Failure& f) {
    return f.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kFailure;
  }
}

}  // namespace

InputFormat resolveFormat(const std::string& path, InputFormat format) {
  if (format != InputFormat::Auto) return format;
  if (path.ends_with(".nt")) return InputFormat::NTriples;
  if (path.ends_with(".ttl")) return InputFormat::Turtle;
  throw UsageError("cannot infer the format of '" + path + "'; use --format");
}

void applyConfigFile(const std::string& path, RunConfig& config) {
  std::vector<util::KeyValueEntry> entries;
  try {
    entries = util::readKeyValueFile(path);
  } catch (const std::exception& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
  bool inlineMapping = false;
  for (const auto& e : entries) {
    const std::string& k = e.key;
    const std::string& v = e.value;
    if (k == "input") {
      config.inputs.push_back(v);
    } else if (k == "format") {
      config.format = parseFormat(v);
    } else if (k == "ontology") {
      config.ontology = v;
    } else if (k == "output") {
      config.output = v;
    } else if (k == "mode") {
      if (v != "strict" && v != "lenient") throw UsageError("mode must be strict or lenient");
      config.strict = v == "strict";
    } else if (k == "vocab.type") {
      config.vocabulary.type = v;
    } else if (k == "vocab.statement") {
      config.vocabulary.statement = v;
    } else if (k == "vocab.subject") {
      config.vocabulary.subject = v;
    } else if (k == "vocab.predicate") {
      config.vocabulary.predicate = v;
    } else if (k == "vocab.object") {
      config.vocabulary.object = v;
    } else if (k == "mapping") {
      config.mapping = loadMapping(v);
    } else if (k == "view") {
      config.view = parseView(v);
    } else if (k == "keep-names") {
      config.keepNames = parseBool(k, v);
    } else if (k == "threads") {
      config.threads = parseThreads(v);
    } else if (k == "json") {
      config.jsonPath = v;
    } else if (k == "pattern" || k.starts_with("role.") || k.starts_with("prefix.")) {
      inlineMapping = true;
    } else {
      throw UsageError("config '" + path + "' line " + std::to_string(e.line) + ": unknown key '" +
                       k + "'");
    }
  }
  if (inlineMapping) {
    try {
      config.mapping = projector::mappingFromEntries(entries);
    } catch (const std::exception& e) {
      throw UsageError("config '" + path + "': " + e.what());
    }
  }
  try {
    config.vocabulary.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("reification vocabulary: ") + e.what());
  }
}

int runConvert(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    store::LocalStore store;
    loadInputs(config, store, false, err);
    auto schema = loadSchema(config, err);
    model::SpgGraph graph = projectBatch(config, store, schema ? &*schema : nullptr, err);
    if (schema) {
      auto report = ontology::validateGraph(
          graph, *schema, config.strict ? ontology::ValidationMode::Strict : ontology::ValidationMode::Lenient);
      err << report.toText();
      for (const auto& note : report.notes()) err << "note: " << note << '\n';
      if (report.failsPipeline()) {
        err << "error: validation failed with " << report.violations().size() << " violation(s)\n";
        return exit_code::kViolations;
      }
    }
    writeGraph(graph, config, out, err);
    return exit_code::kOk;
  });
}

int runValidate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.ontology) throw UsageError("validate requires --ontology");
    store::LocalStore store;
    loadInputs(config, store, false, err);
    auto schema = loadSchema(config, err);
    model::SpgGraph graph = projectBatch(config, store, &*schema, err);
    auto report = ontology::validateGraph(
        graph, *schema, config.strict ? ontology::ValidationMode::Strict : ontology::ValidationMode::Lenient);
    withOutput(config.output, out, err, [&](std::ostream& o) { o << report.toText(); });
    if (config.jsonPath) {
      withOutput(config.jsonPath, out, err, [&](std::ostream& o) { o << report.toJson(); });
    }
    for (const auto& note : report.notes()) err << "note: " << note << '\n';
    return report.passed() ? exit_code::kOk : exit_code::kViolations;
  });
}

int runStats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    store::LocalStore store;
    auto rdfGraph = loadInputs(config, store, false, err);
    bool wantRdf = config.view != StatsView::Spg;
    bool wantSpg = config.view != StatsView::Rdf;
    std::optional<model::SpgGraph> spg;
    if (wantSpg) spg = projectBatch(config, store, nullptr, err);

    nlohmann::ordered_json doc;
    auto emit = [&](const char* view, const analytics::DegreeHistogram& h) {
      if (config.output) {
        withOutput(*config.output + "-" + view + ".csv", out, err, [&](std::ostream& o) { h.writeCsv(o); });
      } else {
        out << "# " << view << " degree histogram\n";
        h.writeCsv(out);
      }
      auto& section = doc[view];
      section["nodes"] = h.nodes;
      section["edges"] = h.edges;
      section["histogram"] = nlohmann::ordered_json::array();
      for (const auto& [degree, count] : h.counts) section["histogram"].push_back({degree, count});
    };
    if (wantRdf) emit("rdf", analytics::degreeHistogram(*rdfGraph));
    if (wantSpg) emit("spg", analytics::degreeHistogram(*spg));
    if (wantRdf && wantSpg) {
      auto metrics = analytics::compactionMetrics(*rdfGraph, *spg);
      if (config.output) {
        withOutput(*config.output + "-metrics.txt", out, err,
                   [&](std::ostream& o) { o << metrics.toKeyValue(); });
      } else {
        out << "# compaction metrics\n";
      }
      out << metrics.toKeyValue();
      doc["metrics"] = nlohmann::ordered_json::parse(metrics.toJson());
    }
    if (config.jsonPath) {
      withOutput(config.jsonPath, out, err, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
    }
    return exit_code::kOk;
  });
}

int runQueryCompact(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    store::LocalStore store;
    auto pattern = loadInputs(config, store, true, err);
    if (!analytics::hasVariables(*pattern)) {
      err << "note: input has no query variables; converting it as a data graph\n";
    }
    projector::ProjectionConfig pc;
    pc.vocabulary = config.vocabulary;
    pc.strict = config.strict;
    pc.threads = config.threads;
    projector::ProjectionResult result;
    try {
      result = analytics::compactQuery(*pattern, pc);
    } catch (const model::DiagnosticError& e) {
      reportDiagnostics(e.diagnostics(), err);
      err << "error: pattern projection failed\n";
      return exit_code::kFailure;
    }
    reportDiagnostics(result.diagnostics, err);
    writeGraph(result.graph, config, out, err);
    return exit_code::kOk;
  });
}

int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projects reified RDF into semantic property graphs.", "spg"};
  app.require_subcommand(1);

  struct Flags {
    std::vector<std::string> inputs;
    std::string format, ontology, output, config, mapping, view, json;
    bool strict = false, lenient = false, keepNames = false;
    unsigned threads = 1;
  } flags;

  struct Command {
    CLI::App* app;
    int (*run)(const RunConfig&, std::ostream&, std::ostream&);
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* description,
                 int (*run)(const RunConfig&, std::ostream&, std::ostream&)) {
    Command c{app.add_subcommand(name, description), run, {}};
    auto* sub = c.app;
    c.options["input"] = sub->add_option("-i,--input", flags.inputs, "RDF input file; repeatable");
    c.options["format"] = sub->add_option("--format", flags.format, "ntriples, turtle or auto (by .nt/.ttl)");
    c.options["ontology"] = sub->add_option("--ontology", flags.ontology, "RDFS ontology file");
    c.options["output"] = sub->add_option("-o,--output", flags.output,
                                          "output file (stats: file prefix); default standard output");
    auto* strict = sub->add_flag("--strict", flags.strict, "fail on projection errors and violations (default)");
    auto* lenient = sub->add_flag("--lenient", flags.lenient, "report problems without failing");
    strict->excludes(lenient);
    c.options["strict"] = strict;
    c.options["lenient"] = lenient;
    c.options["config"] = sub->add_option("--config", flags.config, "key=value config file; flags override it");
    c.options["mapping"] = sub->add_option("--mapping", flags.mapping, "mapping file for query-driven projection");
    c.options["view"] = sub->add_option("--view", flags.view, "stats view: rdf, spg or both");
    c.options["keep-names"] = sub->add_flag("--keep-names", flags.keepNames,
                                            "keep each input as its own named graph");
    c.options["threads"] = sub->add_option("--threads", flags.threads, "projection worker threads");
    c.options["json"] = sub->add_option("--json", flags.json, "write the machine-readable report here");
    commands.push_back(std::move(c));
  };
  add("convert", "project RDF and write GDF", &runConvert);
  add("validate", "project RDF and validate it against an ontology", &runValidate);
  add("stats", "degree histograms and compaction metrics", &runStats);
  add("query-compact", "compact a reified query pattern into a GDF template", &runQueryCompact);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  for (auto& c : commands) {
    if (!c.app->parsed()) continue;
    auto given = [&](const char* name) { return c.options.at(name)->count() > 0; };
    return guarded(err, [&] {
      RunConfig config;
      if (given("config")) applyConfigFile(flags.config, config);
      if (given("input")) config.inputs = flags.inputs;
      if (given("format")) config.format = parseFormat(flags.format);
      if (given("ontology")) config.ontology = flags.ontology;
      if (given("output")) config.output = flags.output;
      if (given("strict")) config.strict = true;
      if (given("lenient")) config.strict = false;
      if (given("mapping")) config.mapping = loadMapping(flags.mapping);
      if (given("view")) config.view = parseView(flags.view);
      if (given("keep-names")) config.keepNames = true;
      if (given("threads")) config.threads = parseThreads(std::to_string(flags.threads));
      if (given("json")) config.jsonPath = flags.json;
      return c.run(config, out, err);
    });
  }
  return exit_code::kUsage;
}

}  // namespace spg::cli
