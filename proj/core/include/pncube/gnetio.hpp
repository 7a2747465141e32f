#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pncube/diagnostics.hpp"
#include "pncube/multiset.hpp"
#include "pncube/net.hpp"
#include "pncube/poly.hpp"

namespace pncube {

struct PolyParseResult {
  std::optional<FlowPolynomial> poly;
  std::string error;
  std::size_t error_offset = 0;

  bool ok() const { return poly.has_value(); }
};

/// Grammar: poly := term ('+' term)* ; term := nat | nat '*' vars | vars ;
/// vars := place ('*' place)* . Repeated place names multiply (p2*p2 is a
/// square); whitespace is insignificant; "0" is the zero polynomial. The
/// result is in merged normal form. Place names are identifiers
/// ([A-Za-z_][A-Za-z0-9_]*); whether they exist is checked by the caller.
PolyParseResult parse_poly(std::string_view text);

struct GnetResult {
  std::optional<Net> net;
  Marking initial;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return net.has_value(); }
};

/// JSON container for self-modifying nets:
///   {"places": [{"name", "initial"(default 0)}],
///    "transitions": [{"name", "in": [{"place", "poly"}],
///                             "out": [{"place", "poly"}]}]}
/// where "poly" is a parse_poly string or a bare nonnegative integer.
/// Duplicate names and unknown place references are errors.
GnetResult parse_gnet(std::string_view bytes);

/// Canonical pretty-printed form; parse_gnet(serialize_gnet(n, i)) restores
/// the same net and marking. Constant weights are written as integers.
std::string serialize_gnet(const Net& net, const Marking& initial);

}  // namespace pncube
