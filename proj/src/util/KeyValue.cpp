#include "spg/util/KeyValue.h"

#include <fstream>
#include <istream>

namespace spg::util {

std::string trim(std::string_view text) {
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && space(text.front())) text.remove_prefix(1);
  while (!text.empty() && space(text.back())) text.remove_suffix(1);
  return std::string(text);
}

std::vector<KeyValueEntry> readKeyValues(std::istream& input) {
  std::vector<KeyValueEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(input, line)) {
    ++number;
    std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    auto eq = content.find('=');
    if (eq == std::string::npos) throw KeyValueError(number, "expected 'key = value'");
    std::string key = trim(std::string_view(content).substr(0, eq));
    if (key.empty()) throw KeyValueError(number, "empty key");
    out.push_back({std::move(key), trim(std::string_view(content).substr(eq + 1)), number});
  }
  return out;
}

std::vector<KeyValueEntry> readKeyValueFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return readKeyValues(in);
}

}  // namespace spg::util
