#include "pncube/build.hpp"

#include <deque>
#include <stdexcept>

namespace pncube {

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::hda: return "hda";
    case Semantics::aposteriori: return "aposteriori";
    case Semantics::apriori: return "apriori";
    case Semantics::st: return "st";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view name) {
  if (name == "hda") return Semantics::hda;
  if (name == "aposteriori") return Semantics::aposteriori;
  if (name == "apriori") return Semantics::apriori;
  if (name == "st") return Semantics::st;
  return std::nullopt;
}

bool cell_admissible(const Net& net, const Marking& m, const Conclist& c, Semantics mode) {
  switch (mode) {
    case Semantics::hda:
      return true;
    case Semantics::apriori:
    case Semantics::aposteriori:
      break;
    default:
      throw std::invalid_argument("cell_admissible: not a cell semantics");
  }
  for (const auto& t : c.labels()) {
    for (const auto& s : net.inhibitors(t)) {
      if (m.count(s) != 0) return false;
    }
  }
  if (mode == Semantics::aposteriori) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Marking post = net.postset(c.label(i));
      if (post.empty()) continue;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (i == j) continue;
        for (const auto& s : net.inhibitors(c.label(j))) {
          if (post.count(s) != 0) return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct Explorer {
  const Net& net;
  Semantics mode;
  const Budget& budget;
  StepStyle style;
  Complex complex;
  BuildStatus status;
  std::deque<std::size_t> queue;

  Explorer(const Net& n, Semantics mode, const Budget& b, StepStyle style)
      : net(n),
        mode(mode),
        budget(b),
        style(style),
        complex(n.transitions(), mode == Semantics::apriori) {}

  void ensure(Cell cell) {
    if (complex.find(cell)) return;
    if (complex.size() >= budget.max_states) {
      status.hit_max_states = true;
      return;
    }
    std::size_t idx = complex.add_cell(std::move(cell));
    queue.push_back(idx);
  }

  bool admissible(const Marking& m, const Conclist& c) const {
    return cell_admissible(net, m, c, mode);
  }

  void downsteps(const Cell& cell) {
    std::size_t d = cell.dim();
    if (d == 0) return;
    if (style == StepStyle::singleton) {
      for (std::size_t j = 0; j < d; ++j) {
        Marking m = cell.marking + net.postset(cell.conclist.label(j));
        Conclist c = cell.conclist.remove({j});
        if (admissible(m, c)) ensure({std::move(m), std::move(c)});
      }
      return;
    }
    EventMask full = static_cast<EventMask>((1u << d) - 1);
    for (EventMask b = full; b != 0; --b) {
      Marking m = cell.marking;
      for (std::size_t j = 0; j < d; ++j) {
        if (b & (EventMask(1) << j)) m += net.postset(cell.conclist.label(j));
      }
      Conclist c = cell.conclist.remove(events_of(b));
      if (admissible(m, c)) ensure({std::move(m), std::move(c)});
    }
  }

  // Starting t from (m, c) is legal when its preset fits m and the target
  // cell is admissible at the reduced marking.
  std::optional<Cell> upstep_target(const Cell& cell, const std::string& t) const {
    Marking pre = net.preset(t);
    if (!pre.leq(cell.marking)) return std::nullopt;
    Marking m = cell.marking - pre;
    Conclist c = cell.conclist.insert(t).first;
    if (!admissible(m, c)) return std::nullopt;
    return Cell{std::move(m), std::move(c)};
  }

  void upsteps_multi(const Cell& cell, std::size_t max_extra) {
    // Multisets over transitions in canonical order, depth-first by count.
    const auto& transitions = net.transitions();
    Marking m = cell.marking;
    std::vector<std::string> added;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (!added.empty()) {
        Conclist c(cell.conclist.labels());
        for (const auto& t : added) c = c.insert(t).first;
        if (admissible(m, c)) ensure({m, std::move(c)});
      }
      if (added.size() == max_extra) return;
      for (std::size_t k = idx; k < transitions.size(); ++k) {
        Marking pre = net.preset(transitions[k]);
        if (!pre.leq(m)) continue;
        m -= pre;
        added.push_back(transitions[k]);
        self(self, k);
        added.pop_back();
        m += pre;
      }
    };
    rec(rec, 0);
  }

  void upsteps(const Cell& cell) {
    std::size_t d = cell.dim();
    if (d >= budget.max_dim) {
      // The cap suppresses further starts; note when one was legal.
      for (const auto& t : net.transitions()) {
        if (upstep_target(cell, t)) {
          status.hit_max_dim = true;
          break;
        }
      }
      return;
    }
    if (style == StepStyle::singleton) {
      for (const auto& t : net.transitions()) {
        if (auto target = upstep_target(cell, t)) ensure(std::move(*target));
      }
    } else {
      upsteps_multi(cell, budget.max_dim - d);
    }
  }

  void run(const Marking& i) {
    Cell init{i, Conclist{}};
    std::size_t idx = complex.add_cell(init);
    complex.add_initial(idx);
    queue.push_back(idx);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      Cell cell = complex.cell(cur);
      downsteps(cell);
      upsteps(cell);
    }
    fill_faces();
  }

  // Faces are computed by the direct marking formula and looked up by key,
  // never by composing singletons: in partial complexes a composite may be
  // defined while the intermediates are not.
  void fill_faces() {
    for (std::size_t i = 0; i < complex.size(); ++i) {
      const Cell cell = complex.cell(i);
      std::size_t d = cell.dim();
      if (d == 0) continue;
      EventMask full = static_cast<EventMask>((1u << d) - 1);
      for (EventMask a = 0; a <= full; ++a) {
        if ((a & full) != a) continue;
        for (EventMask b = full & ~a;; b = (b - 1) & (full & ~a)) {
          if ((a | b) != 0) {
            Marking m = cell.marking;
            for (std::size_t j = 0; j < d; ++j) {
              if (a & (EventMask(1) << j)) m += net.preset(cell.conclist.label(j));
              if (b & (EventMask(1) << j)) m += net.postset(cell.conclist.label(j));
            }
            Cell target{std::move(m), cell.conclist.remove(events_of(a | b))};
            if (auto t = complex.find(target)) complex.set_face(i, a, b, *t);
          }
          if (b == 0) break;
        }
      }
    }
  }
};

}  // namespace

ComplexResult build_complex(const Net& net, const Marking& i, Semantics mode,
                            const Budget& budget, StepStyle style) {
  budget.validate();
  if (net.kind() == NetKind::gnet)
    throw std::invalid_argument("cell semantics are not defined for gnets");
  if (mode == Semantics::hda && net.kind() != NetKind::plain)
    throw std::invalid_argument("hda semantics requires a plain net");
  if (mode == Semantics::st) throw std::invalid_argument("st is not a cell semantics");

  Explorer explorer(net, mode, budget, style);
  explorer.run(i);
  ComplexResult result{sort_cells_by_key(explorer.complex), explorer.status};
  return result;
}

ComplexResult build_hda(const Net& net, const Marking& i, const Budget& budget) {
  return build_complex(net, i, Semantics::hda, budget, StepStyle::singleton);
}

ComplexResult build_phda(const Net& net, const Marking& i, Semantics mode,
                         const Budget& budget) {
  if (mode != Semantics::aposteriori && mode != Semantics::apriori)
    throw std::invalid_argument("build_phda: mode must be aposteriori or apriori");
  return build_complex(net, i, mode, budget, StepStyle::subsets);
}

}  // namespace pncube
