#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "pncube/multiset.hpp"

namespace pncube {

/// Positions into a conclist. Kept sorted and duplicate-free.
using EventSet = std::vector<std::size_t>;

/// Canonically ordered list of concurrently active events, each labeled by
/// a transition name. The list position is the event's identity and the list
/// order is the event order; labels are sorted nondecreasing under shortlex,
/// so equal conclists are exactly the isomorphic ones. Repeated labels are
/// autoconcurrency.
class Conclist {
 public:
  Conclist() = default;
  /// Sorts the labels into canonical order.
  explicit Conclist(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Inserts t at the unique position keeping the list sorted (ties insert
  /// after existing copies) and returns the new list and that position.
  std::pair<Conclist, std::size_t> insert(const std::string& t) const;

  /// Deletes the given positions, preserving the order of the rest.
  Conclist remove(const EventSet& events) const;

  /// Label-occurrence counts.
  TransitionMultiset parikh() const;

  std::string to_string() const;

  bool operator==(const Conclist&) const = default;
  auto operator<=>(const Conclist&) const = default;

 private:
  std::vector<std::string> labels_;
};

std::pair<Conclist, std::size_t> canon_insert(const Conclist& c, const std::string& t);

/// Validates an event set against a conclist of the given size.
void check_events(const EventSet& events, std::size_t size);

}  // namespace pncube
