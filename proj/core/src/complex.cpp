#include "pncube/complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace pncube {

namespace {

constexpr std::size_t kMaxDim = 15;

std::size_t popcount(EventMask m) { return static_cast<std::size_t>(std::popcount(m)); }

// Positions of `sub` relative to the cell, lifted through the removal of
// `removed`: position j of the smaller cell corresponds to the j-th surviving
// position of the larger one.
EventMask lift_mask(EventMask sub, EventMask removed, std::size_t dim) {
  EventMask out = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (removed & (EventMask(1) << i)) continue;
    if (sub & (EventMask(1) << j)) out |= EventMask(1) << i;
    ++j;
  }
  return out;
}

}  // namespace

EventMask mask_of(const EventSet& events) {
  EventMask m = 0;
  for (std::size_t e : events) {
    if (e >= kMaxDim) throw std::out_of_range("event index out of range");
    m |= EventMask(1) << e;
  }
  return m;
}

EventSet events_of(EventMask mask) {
  EventSet out;
  for (std::size_t i = 0; i < kMaxDim; ++i) {
    if (mask & (EventMask(1) << i)) out.push_back(i);
  }
  return out;
}

Complex::Complex(std::vector<std::string> alphabet, bool partial)
    : alphabet_(std::move(alphabet)), partial_(partial) {
  std::sort(alphabet_.begin(), alphabet_.end(), ShortlexLess{});
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

std::size_t Complex::dim() const {
  std::size_t d = 0;
  for (const auto& rec : cells_) d = std::max(d, rec.cell.dim());
  return d;
}

void Complex::add_initial(std::size_t i) {
  if (i >= cells_.size()) throw std::out_of_range("initial cell index out of range");
  if (std::find(initial_.begin(), initial_.end(), i) == initial_.end()) initial_.push_back(i);
}

std::size_t Complex::add_cell(Cell c) {
  if (index_.contains(c)) throw std::invalid_argument("duplicate cell key");
  return add_cell_unchecked(std::move(c));
}

std::size_t Complex::add_cell_unchecked(Cell c) {
  if (c.dim() > kMaxDim) throw std::invalid_argument("cell dimension exceeds representation limit");
  cells_.push_back({c, {}});
  index_.emplace(std::move(c), cells_.size() - 1);
  return cells_.size() - 1;
}

std::optional<std::size_t> Complex::find(const Cell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Complex::set_face(std::size_t cell, EventMask a, EventMask b, std::size_t target) {
  if (cell >= cells_.size() || target >= cells_.size())
    throw std::out_of_range("cell index out of range");
  if (a & b) throw std::invalid_argument("face event sets overlap");
  if ((a | b) == 0) throw std::invalid_argument("empty face is implicit");
  auto& faces = cells_[cell].faces;
  FaceEntry entry{a, b, static_cast<std::uint32_t>(target)};
  auto it = std::lower_bound(faces.begin(), faces.end(), entry,
                             [](const FaceEntry& x, const FaceEntry& y) {
                               return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                             });
  if (it != faces.end() && it->a == a && it->b == b) {
    it->target = entry.target;
  } else {
    faces.insert(it, entry);
  }
}

void Complex::set_face(std::size_t cell, const EventSet& a, const EventSet& b,
                       std::size_t target) {
  set_face(cell, mask_of(a), mask_of(b), target);
}

std::optional<std::size_t> Complex::face(std::size_t cell, EventMask a, EventMask b) const {
  if (cell >= cells_.size()) throw std::out_of_range("cell index out of range");
  if (a & b) throw std::invalid_argument("face event sets overlap");
  EventMask full = static_cast<EventMask>((1u << cells_[cell].cell.dim()) - 1);
  if ((a | b) & ~full) throw std::invalid_argument("face event sets exceed cell events");
  if ((a | b) == 0) return cell;
  const auto& faces = cells_[cell].faces;
  auto it = std::lower_bound(faces.begin(), faces.end(), std::pair(a, b),
                             [](const FaceEntry& x, const std::pair<EventMask, EventMask>& y) {
                               return std::pair(x.a, x.b) < y;
                             });
  if (it != faces.end() && it->a == a && it->b == b) return static_cast<std::size_t>(it->target);
  return std::nullopt;
}

std::optional<std::size_t> Complex::face(std::size_t cell, const EventSet& a,
                                         const EventSet& b) const {
  return face(cell, mask_of(a), mask_of(b));
}

std::vector<Violation> Complex::validate() const {
  std::vector<Violation> out;
  auto report = [&](std::optional<std::size_t> cell, std::string msg) {
    out.push_back({cell, std::move(msg)});
  };

  std::map<Cell, std::size_t> seen;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& c = cells_[i].cell;
    auto [it, inserted] = seen.emplace(c, i);
    if (!inserted)
      report(i, "duplicate cell key (also cell " + std::to_string(it->second) + ")");
    for (const auto& t : c.conclist.labels()) {
      if (!std::binary_search(alphabet_.begin(), alphabet_.end(), t, ShortlexLess{}))
        report(i, "event label not in alphabet: " + t);
    }
  }
  for (std::size_t i : initial_) {
    if (i >= cells_.size()) report(std::nullopt, "initial cell index out of range");
  }

  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& rec = cells_[i];
    std::size_t d = rec.cell.dim();
    EventMask full = static_cast<EventMask>((1u << d) - 1);
    for (const auto& f : rec.faces) {
      if (f.a & f.b) {
        report(i, "face event sets overlap");
        continue;
      }
      if ((f.a | f.b) == 0) {
        report(i, "stored empty face");
        continue;
      }
      if ((f.a | f.b) & ~full) {
        report(i, "face event sets exceed cell events");
        continue;
      }
      if (f.target >= cells_.size()) {
        report(i, "face target index out of range");
        continue;
      }
      Conclist expected = rec.cell.conclist.remove(events_of(f.a | f.b));
      if (cells_[f.target].cell.conclist != expected)
        report(i, "face target has wrong conclist: expected " + expected.to_string() +
                      ", got " + cells_[f.target].cell.conclist.to_string());
    }

    if (!partial_) {
      // Closure under faces: every disjoint (A, B) pair must be present.
      for (EventMask a = 0; a <= full; ++a) {
        if ((a & full) != a) continue;
        for (EventMask b = full & ~a;; b = (b - 1) & (full & ~a)) {
          if ((a | b) != 0 && !face(i, a, b).has_value())
            report(i, "missing face (A=" + std::to_string(a) + ", B=" + std::to_string(b) +
                          ") on non-partial complex");
          if (b == 0) break;
        }
      }
    }
  }

  // Precubical identity. For every stored face (A,B): x -> y and every
  // stored face (C,D): y -> z, the direct face (A|C', B|D') of x must be
  // defined and equal z (C', D' lifted to x positions).
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& rec = cells_[i];
    std::size_t d = rec.cell.dim();
    for (const auto& f : rec.faces) {
      if (f.target >= cells_.size() || (f.a & f.b) != 0) continue;
      for (const auto& g : cells_[f.target].faces) {
        if (g.target >= cells_.size() || (g.a & g.b) != 0) continue;
        EventMask lifted_a = lift_mask(g.a, f.a | f.b, d);
        EventMask lifted_b = lift_mask(g.b, f.a | f.b, d);
        EventMask comp_a = f.a | lifted_a;
        EventMask comp_b = f.b | lifted_b;
        if (comp_a & comp_b) continue;  // ill-typed composition, reported above
        auto direct = face(i, comp_a, comp_b);
        if (!direct.has_value()) {
          report(i, "composite face defined but direct face missing (A=" +
                        std::to_string(comp_a) + ", B=" + std::to_string(comp_b) + ")");
        } else if (*direct != g.target) {
          report(i, "precubical identity violated at (A=" + std::to_string(f.a) + ",B=" +
                        std::to_string(f.b) + ") then (A=" + std::to_string(g.a) + ",B=" +
                        std::to_string(g.b) + ")");
        }
      }
    }
  }

  return out;
}

Complex Complex::truncate(std::size_t k) const {
  Complex out(alphabet_, partial_);
  std::vector<std::optional<std::size_t>> remap(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].cell.dim() <= k) remap[i] = out.add_cell(cells_[i].cell);
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!remap[i]) continue;
    for (const auto& f : cells_[i].faces) {
      if (remap[f.target]) out.set_face(*remap[i], f.a, f.b, *remap[f.target]);
    }
  }
  for (std::size_t i : initial_) {
    if (remap[i]) out.add_initial(*remap[i]);
  }
  return out;
}

LabeledGraph Complex::flatten() const {
  LabeledGraph g;
  for (const auto& rec : cells_) {
    if (rec.cell.dim() == 0) g.vertices.insert(rec.cell.marking);
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    std::size_t d = cells_[i].cell.dim();
    if (d == 0) continue;
    EventMask full = static_cast<EventMask>((1u << d) - 1);
    auto lower = face(i, full, 0);
    auto upper = face(i, 0, full);
    if (!lower || !upper) continue;
    g.add_edge(cells_[*lower].cell.marking, cells_[i].cell.conclist.parikh(),
               cells_[*upper].cell.marking);
  }
  for (std::size_t i : initial_) {
    if (cells_[i].cell.dim() == 0) {
      g.initial = cells_[i].cell.marking;
      break;
    }
  }
  return g;
}

LabeledGraph Complex::skeleton1() const {
  LabeledGraph g;
  for (const auto& rec : cells_) {
    if (rec.cell.dim() == 0) g.vertices.insert(rec.cell.marking);
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].cell.dim() != 1) continue;
    auto lower = face(i, 1, 0);
    auto upper = face(i, 0, 1);
    if (!lower || !upper) continue;
    TransitionMultiset label;
    label.add(cells_[i].cell.conclist.label(0), 1);
    g.add_edge(cells_[*lower].cell.marking, label, cells_[*upper].cell.marking);
  }
  for (std::size_t i : initial_) {
    if (cells_[i].cell.dim() == 0) {
      g.initial = cells_[i].cell.marking;
      break;
    }
  }
  return g;
}

Complex::EssentialResult Complex::essential(const Budget& budget) const {
  budget.validate();
  EssentialResult result;

  // Upsteps follow inverse lower faces, so index those once.
  std::vector<std::vector<std::size_t>> co_lower(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (const auto& f : cells_[i].faces) {
      if (f.b == 0 && f.a != 0) co_lower[f.target].push_back(i);
    }
  }

  std::vector<bool> reached(cells_.size(), false);
  std::deque<std::size_t> queue;
  std::size_t reached_count = 0;
  auto visit = [&](std::size_t i) {
    if (reached[i]) return true;
    if (reached_count >= budget.max_states) {
      result.status.hit_max_states = true;
      return false;
    }
    reached[i] = true;
    ++reached_count;
    queue.push_back(i);
    return true;
  };
  for (std::size_t i : initial_) visit(i);
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& f : cells_[i].faces) {
      if (f.a == 0 && f.b != 0) visit(f.target);  // downstep: terminate events
    }
    for (std::size_t up : co_lower[i]) visit(up);  // upstep: start events
  }

  Complex out(alphabet_, partial_);
  std::vector<std::optional<std::size_t>> remap(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (reached[i]) remap[i] = out.add_cell(cells_[i].cell);
  }
  bool cut = false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!remap[i]) continue;
    for (const auto& f : cells_[i].faces) {
      if (remap[f.target]) {
        out.set_face(*remap[i], f.a, f.b, *remap[f.target]);
      } else {
        cut = true;
      }
    }
  }
  if (cut) out.partial_ = true;
  for (std::size_t i : initial_) {
    if (remap[i]) out.add_initial(*remap[i]);
  }
  result.complex = std::move(out);
  return result;
}

void Complex::complete_faces_by_composition() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      std::size_t d = cells_[i].cell.dim();
      // Copy: set_face invalidates iteration.
      auto faces = cells_[i].faces;
      for (const auto& f : faces) {
        for (const auto& g : cells_[f.target].faces) {
          EventMask lifted_a = lift_mask(g.a, f.a | f.b, d);
          EventMask lifted_b = lift_mask(g.b, f.a | f.b, d);
          EventMask comp_a = f.a | lifted_a;
          EventMask comp_b = f.b | lifted_b;
          if (comp_a & comp_b) continue;
          auto existing = face(i, comp_a, comp_b);
          if (!existing) {
            set_face(i, comp_a, comp_b, g.target);
            changed = true;
          } else if (*existing != g.target) {
            throw std::logic_error("inconsistent faces under composition");
          }
        }
      }
    }
  }
}

Complex sort_cells_by_key(const Complex& x) {
  std::vector<std::size_t> order(x.cells_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Cell& ca = x.cells_[a].cell;
    const Cell& cb = x.cells_[b].cell;
    if (ca.dim() != cb.dim()) return ca.dim() < cb.dim();
    return ca < cb;
  });
  Complex out(x.alphabet_, x.partial_);
  std::vector<std::size_t> remap(x.cells_.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    remap[order[rank]] = out.add_cell(x.cells_[order[rank]].cell);
  }
  for (std::size_t i = 0; i < x.cells_.size(); ++i) {
    for (const auto& f : x.cells_[i].faces) {
      out.set_face(remap[i], f.a, f.b, remap[f.target]);
    }
  }
  std::vector<std::size_t> init;
  for (std::size_t i : x.initial_) init.push_back(remap[i]);
  std::sort(init.begin(), init.end());
  for (std::size_t i : init) out.add_initial(i);
  return out;
}

bool is_path(const Complex& x, const Path& path) {
  if (path.start >= x.size()) return false;
  std::size_t cur = path.start;
  for (const auto& step : path.steps) {
    if (step.cell >= x.size()) return false;
    try {
      if (step.up) {
        auto lower = x.face(step.cell, mask_of(step.events), 0);
        if (!lower || *lower != cur) return false;
      } else {
        auto upper = x.face(cur, 0, mask_of(step.events));
        if (!upper || *upper != step.cell) return false;
      }
    } catch (const std::exception&) {
      return false;  // events outside the cell
    }
    cur = step.cell;
  }
  return true;
}

}  // namespace pncube
