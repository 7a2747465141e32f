#pragma once

#include <string>
#include <vector>

namespace pncube {

/// Parser feedback. Errors mean no usable result was produced; warnings
/// accompany a valid one (e.g. a preset-free transition).
struct ParseDiagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  /// Byte offset ("byte 123") or element/JSON path, depending on the format.
  std::string location;
  std::string message;
};

bool has_errors(const std::vector<ParseDiagnostic>& diagnostics);
std::string to_string(const ParseDiagnostic& d);

}  // namespace pncube
