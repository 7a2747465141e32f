#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pncube {

/// Shortlex order on names: shorter strings first, ties broken lexicographically.
/// This is the global canonical order for places, transitions and events.
bool shortlex_less(std::string_view a, std::string_view b);

struct ShortlexLess {
  bool operator()(std::string_view a, std::string_view b) const {
    return shortlex_less(a, b);
  }
};

/// Finite multiset over string names, kept in canonical sparse form:
/// entries sorted shortlex, no zero counts. Structural equality is
/// multiset equality. Used both for markings (place -> tokens) and for
/// transition multisets (concurrent steps, Parikh images).
class Multiset {
 public:
  using Entry = std::pair<std::string, std::int64_t>;

  Multiset() = default;
  /// Accepts entries in any order, merges duplicates, drops zeros.
  /// Negative counts are rejected.
  explicit Multiset(std::vector<Entry> entries);

  std::int64_t count(std::string_view name) const;
  bool contains(std::string_view name) const { return count(name) > 0; }
  bool empty() const { return entries_.empty(); }
  /// Number of distinct names.
  std::size_t support_size() const { return entries_.size(); }
  /// Total count over all names.
  std::int64_t total() const;

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Sets the count of a name (0 erases the entry).
  void set(std::string_view name, std::int64_t n);
  void add(std::string_view name, std::int64_t n);

  Multiset& operator+=(const Multiset& other);
  /// Pointwise subtraction; requires other <= *this.
  Multiset& operator-=(const Multiset& other);
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }
  friend Multiset operator-(Multiset a, const Multiset& b) { return a -= b; }

  /// Pointwise <=.
  bool leq(const Multiset& other) const;

  bool operator==(const Multiset& other) const = default;
  std::strong_ordering operator<=>(const Multiset& other) const = default;

  /// Additive notation: "2p1+p4", or "0" when empty.
  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

using Marking = Multiset;
using TransitionMultiset = Multiset;

/// Convenience builder: marking_of({{"p1", 2}, {"p4", 1}}).
Multiset multiset_of(std::vector<Multiset::Entry> entries);

}  // namespace pncube
