#include "pncube/diagnostics.hpp"

#include <algorithm>

namespace pncube {

bool has_errors(const std::vector<ParseDiagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const ParseDiagnostic& d) {
    return d.severity == ParseDiagnostic::Severity::error;
  });
}

std::string to_string(const ParseDiagnostic& d) {
  std::string out = d.severity == ParseDiagnostic::Severity::error ? "error" : "warning";
  if (!d.location.empty()) {
    out += " (";
    out += d.location;
    out += ")";
  }
  out += ": ";
  out += d.message;
  return out;
}

}  // namespace pncube
