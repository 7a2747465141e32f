#include "pncube/conclist.hpp"

#include <algorithm>
#include <stdexcept>

namespace pncube {

Conclist::Conclist(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::stable_sort(labels_.begin(), labels_.end(), ShortlexLess{});
}

std::pair<Conclist, std::size_t> Conclist::insert(const std::string& t) const {
  auto pos = std::upper_bound(labels_.begin(), labels_.end(), t, ShortlexLess{});
  std::size_t index = static_cast<std::size_t>(pos - labels_.begin());
  Conclist out = *this;
  out.labels_.insert(out.labels_.begin() + static_cast<std::ptrdiff_t>(index), t);
  return {std::move(out), index};
}

Conclist Conclist::remove(const EventSet& events) const {
  check_events(events, labels_.size());
  Conclist out;
  out.labels_.reserve(labels_.size() - events.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (k < events.size() && events[k] == i) {
      ++k;
    } else {
      out.labels_.push_back(labels_[i]);
    }
  }
  return out;
}

TransitionMultiset Conclist::parikh() const {
  TransitionMultiset out;
  for (const auto& t : labels_) out.add(t, 1);
  return out;
}

std::string Conclist::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0) out += ',';
    out += labels_[i];
  }
  out += ')';
  return out;
}

std::pair<Conclist, std::size_t> canon_insert(const Conclist& c, const std::string& t) {
  return c.insert(t);
}

void check_events(const EventSet& events, std::size_t size) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i] >= size) throw std::out_of_range("event index out of range");
    if (i > 0 && events[i] <= events[i - 1])
      throw std::invalid_argument("event set must be sorted and duplicate-free");
  }
}

}  // namespace pncube
