#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spg/model/Diagnostics.h"
#include "spg/model/SpgGraph.h"

namespace spg::gdf {

enum class ColumnType { Varchar, Int, Double, Boolean };

const char* typeName(ColumnType type);

struct GdfColumn {
  std::string name;
  ColumnType type = ColumnType::Varchar;
  // Property key the column carries; empty for the reserved columns.
  std::string key;

  friend bool operator==(const GdfColumn&, const GdfColumn&) = default;
};

class GdfError : public std::runtime_error {
 public:
  GdfError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Column name for a property key: characters outside [A-Za-z0-9_] become '_',
// a leading digit gets a '_' prefix, and keys naming a reserved column (or a
// reserved column followed by `_attr` suffixes) get one more `_attr`. Keys with
// non-ASCII characters become `p<hash>`.
std::string columnNameFor(std::string_view key, const std::vector<std::string>& reserved);

// Inferred column type of a set of values: all Integer -> INT, Integer/Real
// mix -> DOUBLE, all Boolean -> BOOLEAN, else VARCHAR.
ColumnType inferType(const std::vector<const model::PropertyValue*>& values);

// Field text with single-quote quoting when needed.
std::string quoteField(std::string_view value);

// Writes the nodedef and edgedef sections in canonical order. Warnings about
// renamed columns go to `diagnostics` when given.
void writeGdf(const model::SpgGraph& graph, std::ostream& out,
              model::Diagnostics* diagnostics = nullptr);
std::string writeGdf(const model::SpgGraph& graph, model::Diagnostics* diagnostics = nullptr);

// Reads GDF written by writeGdf (and hand-written templates). Node types are
// restored from labels; edges get ids `e<row>`, zero-padded to a common
// width. Throws GdfError.
model::SpgGraph readGdf(std::istream& in);
model::SpgGraph readGdf(std::string_view text);

}  // namespace spg::gdf
