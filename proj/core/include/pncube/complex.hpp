#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pncube/conclist.hpp"
#include "pncube/graph.hpp"
#include "pncube/multiset.hpp"

namespace pncube {

/// A cell of a (partial) precubical set: the marking left over while the
/// events of the conclist are running. The pair is the cell's identity.
struct Cell {
  Marking marking;
  Conclist conclist;

  std::size_t dim() const { return conclist.size(); }
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

/// Bitmask over conclist positions; bit i stands for event i.
using EventMask = std::uint16_t;

EventMask mask_of(const EventSet& events);
EventSet events_of(EventMask mask);

struct Violation {
  std::optional<std::size_t> cell;
  std::string message;
};

/// Explicit cell complex with extensional face maps. Face maps are stored
/// per cell as (A, B) -> target for disjoint event sets A (unstarted) and
/// B (terminated). A complex with partial=false must be closed under faces
/// and satisfy the precubical identity; with partial=true faces may be
/// missing and the identity is required in containment form: whenever a
/// stepwise composite is defined, the direct face is defined and equal.
class Complex {
 public:
  struct FaceEntry {
    EventMask a = 0;
    EventMask b = 0;
    std::uint32_t target = 0;
    auto operator<=>(const FaceEntry&) const = default;
  };

  Complex() = default;
  Complex(std::vector<std::string> alphabet, bool partial);

  bool partial() const { return partial_; }
  void set_partial(bool partial) { partial_ = partial; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_.at(i).cell; }
  std::size_t dim_of(std::size_t i) const { return cell(i).dim(); }
  /// Largest cell dimension (0 for the empty complex).
  std::size_t dim() const;

  const std::vector<std::size_t>& initial() const { return initial_; }
  void add_initial(std::size_t i);

  /// Adds a cell; rejects duplicates of an existing (marking, conclist) key.
  std::size_t add_cell(Cell c);
  /// Adds a cell even when its key duplicates an existing one; loaders use
  /// this so validate() can report the duplication.
  std::size_t add_cell_unchecked(Cell c);
  std::optional<std::size_t> find(const Cell& c) const;

  void set_face(std::size_t cell, EventMask a, EventMask b, std::size_t target);
  void set_face(std::size_t cell, const EventSet& a, const EventSet& b, std::size_t target);

  /// The stored face, or absent. A and B must be disjoint subsets of the
  /// cell's events; the empty face is the identity.
  std::optional<std::size_t> face(std::size_t cell, EventMask a, EventMask b) const;
  std::optional<std::size_t> face(std::size_t cell, const EventSet& a, const EventSet& b) const;

  const std::vector<FaceEntry>& faces(std::size_t cell) const { return cells_.at(cell).faces; }

  /// Structural checks: canonical conclists, well-formed face entries,
  /// face-closure when non-partial, and the precubical identity (containment
  /// form when partial). Empty result means the complex is valid.
  std::vector<Violation> validate() const;

  /// Cells of dimension <= k with faces restricted.
  Complex truncate(std::size_t k) const;

  /// One multiset-labeled edge per cell whose full lower and upper faces are
  /// both defined; vertices are the 0-cells.
  LabeledGraph flatten() const;

  /// The 1-truncation viewed as a graph: vertices are 0-cells, edges come
  /// from 1-cells with both singleton faces defined.
  LabeledGraph skeleton1() const;

  /// Sub-complex of cells reachable from the initial cells by upsteps
  /// (inverse lower faces) and downsteps (upper faces), with any event sets.
  /// The result is flagged partial if a face of a surviving cell got cut.
  struct EssentialResult;
  EssentialResult essential(const Budget& budget) const;

  /// Derives composite faces from stored ones by composition until fixpoint.
  /// For hand-assembled complexes whose singleton faces are consistent.
  /// Throws if two derivations disagree.
  void complete_faces_by_composition();

  bool operator==(const Complex&) const = default;

 private:
  struct CellRecord {
    Cell cell;
    std::vector<FaceEntry> faces;  // sorted by (a, b)
    bool operator==(const CellRecord&) const = default;
  };

  std::vector<std::string> alphabet_;
  bool partial_ = false;
  std::vector<CellRecord> cells_;
  std::map<Cell, std::size_t> index_;
  std::vector<std::size_t> initial_;

  friend Complex sort_cells_by_key(const Complex& x);
};

struct Complex::EssentialResult {
  Complex complex;
  BuildStatus status;
};

/// Rebuilds the complex with cells ordered by (dimension, conclist, marking);
/// gives deterministic, discovery-order-independent cell ids.
Complex sort_cells_by_key(const Complex& x);

/// Alternating up/down steps between cells.
struct Path {
  struct Step {
    bool up = true;
    EventSet events;
    std::size_t cell = 0;
  };
  std::size_t start = 0;
  std::vector<Step> steps;
};

/// True iff every step matches the face structure: an upstep into cell x
/// requires the lower face of x at the step's events to be defined and equal
/// to the previous cell; a downstep requires the upper face symmetrically.
bool is_path(const Complex& x, const Path& path);

}  // namespace pncube
