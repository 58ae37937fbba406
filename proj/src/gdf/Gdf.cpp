#include "spg/gdf/Gdf.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "spg/util/Fnv.h"

namespace spg::gdf {

namespace {

using model::PropertyValue;

const std::vector<std::string> kNodeReserved{"name", "label"};
const std::vector<std::string> kEdgeReserved{"node1", "node2", "directed", "label"};
constexpr std::string_view kAttrSuffix = "_attr";

bool isReservedForm(std::string_view name, const std::vector<std::string>& reserved) {
  for (const auto& r : reserved) {
    if (!name.starts_with(r)) continue;
    std::string_view rest = name.substr(r.size());
    while (rest.starts_with(kAttrSuffix)) rest.remove_prefix(kAttrSuffix.size());
    if (rest.empty()) return true;
  }
  return false;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<GdfColumn> propertyColumns(const std::vector<const model::PropertyMap*>& elements,
                                       const std::vector<std::string>& reserved,
                                       const char* section, model::Diagnostics* diagnostics) {
  std::map<std::string, std::vector<const PropertyValue*>> byKey;
  for (const auto* props : elements) {
    for (const auto& [key, value] : *props) byKey[key].push_back(&value);
  }
  std::set<std::string> taken(reserved.begin(), reserved.end());
  std::vector<GdfColumn> columns;
  for (const auto& [key, values] : byKey) {
    std::string name = columnNameFor(key, reserved);
    bool ascii = !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
      return static_cast<unsigned char>(c) < 0x80;
    });
    if (!ascii && diagnostics) {
      diagnostics->warn("gdf-column-renamed",
                        std::string(section) + " property key '" + key +
                            "' is not representable as a column name; written as '" + name + "'",
                        key);
    }
    if (taken.contains(name)) {
      std::string base = name;
      int n = 2;
      while (taken.contains(base + "_" + std::to_string(n))) ++n;
      name = base + "_" + std::to_string(n);
      if (diagnostics) {
        diagnostics->warn("gdf-column-renamed",
                          std::string(section) + " property key '" + key +
                              "' clashes with another column; written as '" + name + "'",
                          key);
      }
    }
    taken.insert(name);
    columns.push_back({name, inferType(values), key});
  }
  return columns;
}

std::string fieldFor(const PropertyValue& value, ColumnType type) {
  switch (type) {
    case ColumnType::Int:
      return std::to_string(value.asInteger());
    case ColumnType::Double:
      return model::formatReal(value.kind() == PropertyValue::Kind::Integer
                                   ? static_cast<double>(value.asInteger())
                                   : value.asReal());
    case ColumnType::Boolean:
      return value.asBoolean() ? "true" : "false";
    case ColumnType::Varchar:
      break;
  }
  std::string text = value.toString();
  if (text.empty()) return "''";
  return quoteField(text);
}

void writeHeader(std::ostream& out, std::string_view fixed, const std::vector<GdfColumn>& columns) {
  out << fixed;
  for (const auto& c : columns) out << ',' << c.name << ' ' << typeName(c.type);
  out << '\n';
}

void writeProperties(std::ostream& out, const model::PropertyMap& properties,
                     const std::vector<GdfColumn>& columns) {
  for (const auto& c : columns) {
    out << ',';
    auto it = properties.find(c.key);
    if (it != properties.end()) out << fieldFor(it->second, c.type);
  }
}

// Record splitter for GDF text: commas separate fields, a field starting with
// a single quote runs to the matching quote (doubled quotes escape) and may
// span lines.
struct Field {
  std::string text;
  bool quoted = false;
};

class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  // Returns false at end of input. Blank lines are skipped.
  bool next(std::vector<Field>& fields, std::size_t& line) {
    for (;;) {
      fields.clear();
      if (in_.peek() == std::char_traits<char>::eof()) return false;
      line = line_ + 1;
      if (readRecord(fields)) return true;
    }
  }

 private:
  // Returns false for a blank line.
  bool readRecord(std::vector<Field>& fields) {
    Field field;
    bool any = false;
    for (;;) {
      int c = in_.get();
      if (c == std::char_traits<char>::eof() || c == '\n') {
        ++line_;
        if (!field.quoted && !field.text.empty() && field.text.back() == '\r') field.text.pop_back();
        if (!any && field.text.empty() && !field.quoted) return false;
        fields.push_back(std::move(field));
        return true;
      }
      any = true;
      if (c == '\'' && field.text.empty() && !field.quoted) {
        field.quoted = true;
        readQuoted(field.text);
        int after = in_.peek();
        if (after != ',' && after != '\n' && after != '\r' && after != std::char_traits<char>::eof()) {
          throw GdfError(line_ + 1, "unexpected character after closing quote");
        }
        continue;
      }
      if (c == ',') {
        fields.push_back(std::move(field));
        field = Field{};
        continue;
      }
      if (c == '\r' && field.quoted) continue;
      field.text += static_cast<char>(c);
    }
  }

  void readQuoted(std::string& text) {
    std::size_t start = line_ + 1;
    for (;;) {
      int c = in_.get();
      if (c == std::char_traits<char>::eof()) throw GdfError(start, "unterminated quoted field");
      if (c == '\'') {
        if (in_.peek() == '\'') {
          in_.get();
          text += '\'';
          continue;
        }
        return;
      }
      if (c == '\n') ++line_;
      text += static_cast<char>(c);
    }
  }

  std::istream& in_;
  std::size_t line_ = 0;
};

std::string trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

std::vector<GdfColumn> parseHeader(const std::vector<Field>& fields, std::string_view prefix,
                                   const std::vector<std::string>& reserved, std::size_t line) {
  std::vector<GdfColumn> columns;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string spec = trimmed(i == 0 ? std::string_view(fields[i].text).substr(prefix.size())
                                      : std::string_view(fields[i].text));
    auto space = spec.find_first_of(" \t");
    GdfColumn column;
    column.name = spec.substr(0, space);
    if (column.name.empty()) throw GdfError(line, "empty column name in header");
    std::string token = space == std::string::npos ? "VARCHAR" : upper(trimmed(spec.substr(space)));
    if (token == "VARCHAR") {
      column.type = ColumnType::Varchar;
    } else if (token == "INT") {
      column.type = ColumnType::Int;
    } else if (token == "DOUBLE") {
      column.type = ColumnType::Double;
    } else if (token == "BOOLEAN") {
      column.type = ColumnType::Boolean;
    } else {
      throw GdfError(line, "unsupported column type '" + trimmed(spec.substr(space)) +
                               "' for column '" + column.name + "'");
    }
    if (std::find(reserved.begin(), reserved.end(), column.name) == reserved.end()) {
      column.key = column.name;
      if (isReservedForm(column.name, reserved)) {
        column.key.resize(column.key.size() - kAttrSuffix.size());
      }
    }
    columns.push_back(std::move(column));
  }
  return columns;
}

std::optional<PropertyValue> parseValue(const Field& field, ColumnType type, std::size_t line,
                                        const std::string& column) {
  if (field.text.empty() && !field.quoted) return std::nullopt;
  const std::string& text = field.text;
  auto bad = [&]() {
    return GdfError(line, "value '" + text + "' does not fit column '" + column + "' of type " +
                              typeName(type));
  };
  switch (type) {
    case ColumnType::Varchar:
      return PropertyValue::text(text);
    case ColumnType::Int: {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
      return PropertyValue::integer(v);
    }
    case ColumnType::Double: {
      if (text == "INF") return PropertyValue::real(INFINITY);
      if (text == "-INF") return PropertyValue::real(-INFINITY);
      if (text == "NaN") return PropertyValue::real(NAN);
      double v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
      return PropertyValue::real(v);
    }
    case ColumnType::Boolean: {
      std::string u = upper(text);
      if (u == "TRUE") return PropertyValue::boolean(true);
      if (u == "FALSE") return PropertyValue::boolean(false);
      throw bad();
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> indexOf(const std::vector<GdfColumn>& columns, std::string_view name) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].key.empty() && columns[i].name == name) return i;
  }
  return std::nullopt;
}

}  // namespace

const char* typeName(ColumnType type) {
  switch (type) {
    case ColumnType::Varchar: return "VARCHAR";
    case ColumnType::Int: return "INT";
    case ColumnType::Double: return "DOUBLE";
    case ColumnType::Boolean: return "BOOLEAN";
  }
  return "VARCHAR";
}

std::string columnNameFor(std::string_view key, const std::vector<std::string>& reserved) {
  bool ascii = !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (!ascii) return "p" + util::fnv1a32Hex(key);
  std::string name;
  for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '_';
  if (std::isdigit(static_cast<unsigned char>(name.front()))) name.insert(name.begin(), '_');
  if (isReservedForm(name, reserved)) name += kAttrSuffix;
  return name;
}

ColumnType inferType(const std::vector<const model::PropertyValue*>& values) {
  bool allInt = true, allNumeric = true, allBool = true;
  for (const auto* v : values) {
    auto kind = v->kind();
    allInt = allInt && kind == PropertyValue::Kind::Integer;
    allNumeric = allNumeric && (kind == PropertyValue::Kind::Integer || kind == PropertyValue::Kind::Real);
    allBool = allBool && kind == PropertyValue::Kind::Boolean;
  }
  if (values.empty()) return ColumnType::Varchar;
  if (allInt) return ColumnType::Int;
  if (allNumeric) return ColumnType::Double;
  if (allBool) return ColumnType::Boolean;
  return ColumnType::Varchar;
}

std::string quoteField(std::string_view value) {
  if (value.find_first_of(",'\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "'";
  for (char c : value) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

void writeGdf(const model::SpgGraph& graph, std::ostream& out, model::Diagnostics* diagnostics) {
  std::vector<const model::PropertyMap*> nodeProps;
  for (const auto& [id, node] : graph.nodes()) nodeProps.push_back(&node.properties);
  std::vector<const model::SpgEdge*> edges;
  for (const auto& e : graph.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const auto* a, const auto* b) { return model::canonicalEdgeLess(*a, *b); });
  std::vector<const model::PropertyMap*> edgeProps;
  for (const auto* e : edges) edgeProps.push_back(&e->properties);

  auto nodeColumns = propertyColumns(nodeProps, kNodeReserved, "node", diagnostics);
  auto edgeColumns = propertyColumns(edgeProps, kEdgeReserved, "edge", diagnostics);

  writeHeader(out, "nodedef>name VARCHAR,label VARCHAR", nodeColumns);
  for (const auto& [id, node] : graph.nodes()) {
    out << quoteField(node.id) << ',' << quoteField(node.label);
    writeProperties(out, node.properties, nodeColumns);
    out << '\n';
  }
  writeHeader(out, "edgedef>node1 VARCHAR,node2 VARCHAR,directed BOOLEAN,label VARCHAR",
              edgeColumns);
  for (const auto* e : edges) {
    out << quoteField(e->source) << ',' << quoteField(e->target) << ",true,"
        << quoteField(e->label);
    writeProperties(out, e->properties, edgeColumns);
    out << '\n';
  }
}

std::string writeGdf(const model::SpgGraph& graph, model::Diagnostics* diagnostics) {
  std::ostringstream out;
  writeGdf(graph, out, diagnostics);
  return out.str();
}

model::SpgGraph readGdf(std::istream& in) {
  RecordReader reader(in);
  std::vector<Field> fields;
  std::size_t line = 0;
  if (!reader.next(fields, line) || fields.empty() || !fields[0].text.starts_with("nodedef>")) {
    throw GdfError(line == 0 ? 1 : line, "missing nodedef header");
  }
  auto nodeColumns = parseHeader(fields, "nodedef>", kNodeReserved, line);
  auto nameCol = indexOf(nodeColumns, "name");
  if (!nameCol) throw GdfError(line, "nodedef header has no 'name' column");
  auto labelCol = indexOf(nodeColumns, "label");

  model::SpgGraph graph;
  std::vector<GdfColumn> edgeColumns;
  bool inEdges = false;
  std::optional<std::size_t> node1, node2, edgeLabel;
  std::vector<model::SpgEdge> rows;
  while (reader.next(fields, line)) {
    if (!fields[0].quoted && fields[0].text.starts_with("edgedef>")) {
      if (inEdges) throw GdfError(line, "second edgedef header");
      inEdges = true;
      edgeColumns = parseHeader(fields, "edgedef>", kEdgeReserved, line);
      node1 = indexOf(edgeColumns, "node1");
      node2 = indexOf(edgeColumns, "node2");
      edgeLabel = indexOf(edgeColumns, "label");
      if (!node1 || !node2) throw GdfError(line, "edgedef header needs 'node1' and 'node2' columns");
      continue;
    }
    const auto& columns = inEdges ? edgeColumns : nodeColumns;
    if (fields.size() > columns.size()) {
      throw GdfError(line, "row has " + std::to_string(fields.size()) + " fields but the header declares " +
                               std::to_string(columns.size()));
    }
    fields.resize(columns.size());
    model::PropertyMap properties;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].key.empty()) continue;
      if (auto v = parseValue(fields[i], columns[i].type, line, columns[i].name)) {
        properties.emplace(columns[i].key, std::move(*v));
      }
    }
    if (!inEdges) {
      const std::string& id = fields[*nameCol].text;
      if (id.empty()) throw GdfError(line, "node row without a name");
      if (graph.hasNode(id)) throw GdfError(line, "duplicate node '" + id + "'");
      model::SpgNode& node = graph.upsertNode(id);
      if (labelCol && !fields[*labelCol].text.empty()) node.label = fields[*labelCol].text;
      if (node.label != model::kDefaultLabel) node.types.insert(node.label);
      node.properties = std::move(properties);
    } else {
      const std::string& source = fields[*node1].text;
      const std::string& target = fields[*node2].text;
      for (const auto* endpoint : {&source, &target}) {
        if (!graph.hasNode(*endpoint)) {
          throw GdfError(line, "edge references undeclared node '" + *endpoint + "'");
        }
      }
      rows.push_back({{}, source, target, edgeLabel ? fields[*edgeLabel].text : std::string(),
                      std::move(properties)});
    }
  }
  // Equal-width ids keep parallel edges in row order under canonical sorting.
  std::size_t width = std::to_string(rows.empty() ? 0 : rows.size() - 1).size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string number = std::to_string(i);
    rows[i].id = "e" + std::string(width - number.size(), '0') + number;
    graph.addEdge(std::move(rows[i]));
  }
  graph.canonicalize();
  return graph;
}

model::SpgGraph readGdf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return readGdf(in);
}

}  // namespace spg::gdf
