#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spg/projector/Mapping.h"
#include "spg/rdf/Vocabulary.h"

namespace spg::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;     // parse, projection or I/O error
inline constexpr int kViolations = 2;  // validation failed
inline constexpr int kUsage = 64;
}  // namespace exit_code

enum class InputFormat { NTriples, Turtle, Auto };
enum class StatsView { Rdf, Spg, Both };

struct RunConfig {
  std::vector<std::string> inputs;
  InputFormat format = InputFormat::Auto;
  std::optional<std::string> ontology;
  std::optional<std::string> output;
  bool strict = true;
  rdf::ReificationVocabulary vocabulary;
  // Mapping-driven projection, from --mapping or from entries in the config file.
  std::optional<projector::MappingSpec> mapping;
  StatsView view = StatsView::Both;
  bool keepNames = false;
  unsigned threads = 1;
  // Where the machine-readable report goes (validate, stats).
  std::optional<std::string> jsonPath;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies a key=value config file. Keys: input (repeatable), format, ontology,
// output, mode (strict|lenient), vocab.{type,statement,subject,predicate,object},
// mapping (path), view, keep-names, threads, json, plus inline mapping entries
// (prefix.*, pattern, role.*). Throws UsageError.
void applyConfigFile(const std::string& path, RunConfig& config);

// Resolves Auto by extension: .nt -> N-Triples, .ttl -> Turtle.
InputFormat resolveFormat(const std::string& path, InputFormat format);

int runConvert(const RunConfig& config, std::ostream& out, std::ostream& err);
int runValidate(const RunConfig& config, std::ostream& out, std::ostream& err);
int runStats(const RunConfig& config, std::ostream& out, std::ostream& err);
int runQueryCompact(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line and dispatches to a subcommand.
int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spg::cli
