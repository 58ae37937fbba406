#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spg::model {

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity;
  std::string code;
  std::string message;
  std::string term;  // offending node or IRI, may be empty

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

class Diagnostics {
 public:
  void warn(std::string code, std::string message, std::string term = {});
  void error(std::string code, std::string message, std::string term = {});
  void append(const Diagnostics& other);

  const std::vector<Diagnostic>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool hasErrors() const;
  std::size_t count(Severity severity) const;
  std::size_t count(const std::string& code) const;

  // One `severity: [code] message` line per entry.
  std::string toString() const;

 private:
  std::vector<Diagnostic> entries_;
};

// Raised in strict mode when a step produced error-severity diagnostics.
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostics diagnostics);
  const Diagnostics& diagnostics() const { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

}  // namespace spg::model
