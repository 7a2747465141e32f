#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pncube/diagnostics.hpp"
#include "pncube/multiset.hpp"
#include "pncube/net.hpp"

namespace pncube {

struct PnmlResult {
  std::optional<Net> net;
  Marking initial;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return net.has_value(); }
};

/// Reads the PNML core model: net/page/place/transition/arc with
/// initialMarking and inscription integers. An arc whose `type` child has
/// text or a `value` attribute equal to "inhibitor" is an inhibitor arc and
/// makes the net an inhibitor net. Ill-formed XML, dangling references and
/// negative numbers are errors; unknown elements are skipped with warnings;
/// preset-free transitions are reported as warnings.
PnmlResult parse_pnml(std::string_view bytes);

}  // namespace pncube
