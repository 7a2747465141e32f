#pragma once

#include <string>

#include "pncube/build.hpp"
#include "pncube/graph.hpp"
#include "pncube/stgraph.hpp"

namespace pncube {

struct OracleReport {
  bool pass = false;
  /// A budget cut exploration short; the comparison then covers only the
  /// mutually explored region.
  bool bounded = false;
  std::string detail;
};

/// Compares the interleaved reachability graph against the 1-truncation of
/// the semantics' complex (or ST-graph), under the identity-on-markings
/// correspondence. Exact for hda, aposteriori and st; for apriori the
/// complex may legitimately reach extra vertices through multi-event
/// downsteps, so the comparison is restricted to the common region with the
/// reachability graph's side required to be contained.
OracleReport check_truncation(const Net& net, const Marking& i, Semantics sem,
                              const Budget& budget);

/// Compares the concurrent-step reachability graph against the flattening
/// of the semantics' complex. Cell semantics only.
OracleReport check_flatten(const Net& net, const Marking& i, Semantics sem,
                           const Budget& budget);

}  // namespace pncube
