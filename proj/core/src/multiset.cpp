#include "pncube/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace pncube {

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

void check_nonneg(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("multiset counts must be nonnegative");
}

}  // namespace

Multiset::Multiset(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return shortlex_less(a.first, b.first);
  });
  for (auto& [name, n] : entries) {
    check_nonneg(n);
    if (n == 0) continue;
    if (!entries_.empty() && entries_.back().first == name) {
      entries_.back().second += n;
    } else {
      entries_.emplace_back(std::move(name), n);
    }
  }
}

std::int64_t Multiset::count(std::string_view name) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), name,
      [](const Entry& e, std::string_view v) { return shortlex_less(e.first, v); });
  if (it != entries_.end() && it->first == name) return it->second;
  return 0;
}

std::int64_t Multiset::total() const {
  std::int64_t sum = 0;
  for (const auto& [name, n] : entries_) {
    if (__builtin_add_overflow(sum, n, &sum))
      throw std::overflow_error("multiset total overflow");
  }
  return sum;
}

void Multiset::set(std::string_view name, std::int64_t n) {
  check_nonneg(n);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), name,
      [](const Entry& e, std::string_view v) { return shortlex_less(e.first, v); });
  if (it != entries_.end() && it->first == name) {
    if (n == 0) {
      entries_.erase(it);
    } else {
      it->second = n;
    }
  } else if (n != 0) {
    entries_.insert(it, Entry(std::string(name), n));
  }
}

void Multiset::add(std::string_view name, std::int64_t n) {
  std::int64_t cur = count(name);
  std::int64_t next = 0;
  if (__builtin_add_overflow(cur, n, &next))
    throw std::overflow_error("multiset count overflow");
  set(name, next);
}

Multiset& Multiset::operator+=(const Multiset& other) {
  for (const auto& [name, n] : other.entries_) add(name, n);
  return *this;
}

Multiset& Multiset::operator-=(const Multiset& other) {
  for (const auto& [name, n] : other.entries_) {
    std::int64_t cur = count(name);
    if (cur < n) throw std::invalid_argument("multiset subtraction would go negative");
    set(name, cur - n);
  }
  return *this;
}

bool Multiset::leq(const Multiset& other) const {
  for (const auto& [name, n] : entries_) {
    if (n > other.count(name)) return false;
  }
  return true;
}

std::string Multiset::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [name, n] : entries_) {
    if (!out.empty()) out += '+';
    if (n != 1) out += std::to_string(n);
    out += name;
  }
  return out;
}

Multiset multiset_of(std::vector<Multiset::Entry> entries) {
  return Multiset(std::move(entries));
}

}  // namespace pncube
