#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spg::util {

class KeyValueError : public std::runtime_error {
 public:
  KeyValueError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct KeyValueEntry {
  std::string key;
  std::string value;
  std::size_t line;
};

// Flat `key = value` text, one entry per line. Blank lines and lines starting
// with '#' are skipped; keys and values are trimmed; repeated keys are kept in
// file order.
std::vector<KeyValueEntry> readKeyValues(std::istream& input);
std::vector<KeyValueEntry> readKeyValueFile(const std::string& path);

std::string trim(std::string_view text);

}  // namespace spg::util
