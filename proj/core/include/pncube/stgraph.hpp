#pragma once

#include <compare>
#include <map>
#include <vector>

#include "pncube/conclist.hpp"
#include "pncube/graph.hpp"
#include "pncube/multiset.hpp"
#include "pncube/net.hpp"

namespace pncube {

/// Memory of one active transition: what its firing consumes and produces,
/// with the marking-independent (constant-arc) part removed. Two pre-firing
/// markings have the same effect on the net exactly when these pairs agree,
/// so the pair is a canonical representative of the memory-equivalence class
/// and transitions with only constant arcs carry no memory at all.
struct MemoryEntry {
  Marking consume;
  Marking produce;
  bool operator==(const MemoryEntry&) const = default;
  auto operator<=>(const MemoryEntry&) const = default;
};

/// State of the ST-graph: current marking, active events, and one memory
/// entry per event (aligned with conclist positions).
struct STState {
  Marking marking;
  Conclist conclist;
  std::vector<MemoryEntry> memory;

  std::size_t dim() const { return conclist.size(); }
  bool operator==(const STState&) const = default;
  auto operator<=>(const STState&) const = default;
};

struct STEdge {
  enum class Kind { start, terminate };
  std::size_t src = 0;
  Kind kind = Kind::start;
  /// Position of the affected event in the larger state's conclist
  /// (the target for starts, the source for terminations).
  std::size_t position = 0;
  std::size_t dst = 0;

  bool operator==(const STEdge&) const = default;
  auto operator<=>(const STEdge&) const = default;
};

struct STGraph {
  std::vector<std::string> alphabet;
  std::vector<STState> states;
  std::vector<STEdge> edges;  // sorted
  std::vector<std::size_t> initial;

  std::size_t dim() const;
  bool operator==(const STGraph&) const = default;
};

struct STResult {
  STGraph graph;
  BuildStatus status;
};

/// Reachable ST-graph of a self-modifying net from marking i. Starting a
/// transition consumes its effect evaluated at the current marking and
/// remembers the canonical effect pair at the insertion position;
/// terminating restores the remembered production and drops the entry.
/// States are quotiented by memory equivalence by construction.
/// Plain nets are accepted via embed_to_gnet.
STResult build_st(const Net& net, const Marking& i, const Budget& budget);

/// Vertices are the markings of 0-dimensional states; there is one edge
/// (m, t, m') per 1-dimensional state reachable by a start edge from m
/// and leaving by a termination edge to m'.
LabeledGraph st_truncate1(const STGraph& g);

struct STViolation {
  std::size_t state = 0;
  std::string message;
};

/// Structural checks: memory aligned with conclists, edge endpoints in
/// range, and the start/terminate label conditions (the smaller state's
/// conclist and memory are the larger's with the edge position removed).
std::vector<STViolation> validate_st(const STGraph& g);

}  // namespace pncube
