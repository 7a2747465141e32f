#pragma once

#include <optional>
#include <string>

#include "pncube/complex.hpp"
#include "pncube/graph.hpp"
#include "pncube/net.hpp"

namespace pncube {

/// The four translations offered by the tool.
enum class Semantics { hda, aposteriori, apriori, st };

const char* to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view name);

/// Whether a cell (m, c) may exist in the given semantics:
///   hda         -- always;
///   apriori     -- no token of m sits on an inhibitor place of any event;
///   aposteriori -- additionally, no event produces into another event's
///                  inhibitor place (distinct positions, so autoconcurrent
///                  copies count against each other).
bool cell_admissible(const Net& net, const Marking& m, const Conclist& c, Semantics mode);

/// Whether exploration extends cells by single events only or by whole
/// event sets. Singleton suffices for plain nets and (absent pathological
/// inhibitor wiring) a-posteriori ones; a-priori needs full subset steps,
/// e.g. when only a multi-event downstep reaches a vertex.
enum class StepStyle { singleton, subsets };

struct ComplexResult {
  Complex complex;
  BuildStatus status;
};

/// Reachable part of the HDA translation of a plain net: from a cell the
/// events that can start are those whose preset fits the remaining marking,
/// and faces follow the marking arithmetic. Cells are keyed canonically, so
/// permutations of concurrent events collapse to one cell.
ComplexResult build_hda(const Net& net, const Marking& i, const Budget& budget);

/// Reachable part of the partial-HDA translation of an inhibitor net (plain
/// nets accepted; both modes then coincide with build_hda). A cell exists
/// only if admissible; faces are defined exactly when the target cell is.
/// The a-priori result is flagged partial; the a-posteriori one is
/// face-closed.
ComplexResult build_phda(const Net& net, const Marking& i, Semantics mode,
                         const Budget& budget);

/// Shared implementation with an explicit step style.
ComplexResult build_complex(const Net& net, const Marking& i, Semantics mode,
                            const Budget& budget, StepStyle style);

}  // namespace pncube
