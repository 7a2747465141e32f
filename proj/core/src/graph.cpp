#include "pncube/graph.hpp"

#include <deque>
#include <stdexcept>

namespace pncube {

void Budget::validate() const {
  if (max_states == 0 || max_dim == 0)
    throw std::invalid_argument("budget limits must be positive");
}

void LabeledGraph::add_edge(const Marking& src, const TransitionMultiset& label,
                            const Marking& dst) {
  vertices.insert(src);
  vertices.insert(dst);
  edges.insert({src, label, dst});
}

GraphResult reachability_graph(const Net& net, const Marking& i, const Budget& budget) {
  budget.validate();
  GraphResult result;
  auto& graph = result.graph;
  graph.initial = i;
  graph.vertices.insert(i);
  std::deque<Marking> queue{i};
  while (!queue.empty()) {
    Marking m = queue.front();
    queue.pop_front();
    for (const auto& t : net.transitions()) {
      if (!enabled(net, m, t)) continue;
      Marking next = fire(net, m, t);
      if (!graph.vertices.contains(next)) {
        if (graph.vertices.size() >= budget.max_states) {
          result.status.hit_max_states = true;
          continue;
        }
        graph.vertices.insert(next);
        queue.push_back(next);
      }
      TransitionMultiset label;
      label.add(t, 1);
      graph.edges.insert({m, label, next});
    }
  }
  return result;
}

namespace {

// Enumerates all nonempty multisets over net.transitions() whose preset fits
// under m, sizes capped, in canonical (sorted) order; calls fn on each.
template <typename Fn>
void for_each_step(const Net& net, const Marking& m, std::size_t max_size, Fn&& fn) {
  const auto& transitions = net.transitions();
  TransitionMultiset step;
  Marking remaining = m;
  std::size_t used = 0;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == transitions.size()) {
      if (!step.empty()) fn(step);
      return;
    }
    const auto& t = transitions[idx];
    Marking pre = net.preset(t);
    // Count 0 first keeps enumeration ordered by increasing multiplicity.
    self(self, idx + 1);
    std::int64_t count = 0;
    while (used < max_size && pre.leq(remaining)) {
      remaining -= pre;
      ++count;
      ++used;
      step.add(t, 1);
      self(self, idx + 1);
    }
    if (count > 0) {
      step.set(t, 0);
      used -= static_cast<std::size_t>(count);
      for (std::int64_t k = 0; k < count; ++k) remaining += pre;
    }
  };
  rec(rec, 0);
}

}  // namespace

GraphResult cs_reachability_graph(const Net& net, const Marking& i, StepMode mode,
                                  const Budget& budget) {
  budget.validate();
  if (net.kind() == NetKind::gnet)
    throw std::invalid_argument("cs_reachability_graph: no step rule for gnets");
  GraphResult result;
  auto& graph = result.graph;
  graph.initial = i;
  graph.vertices.insert(i);
  std::deque<Marking> queue{i};
  while (!queue.empty()) {
    Marking m = queue.front();
    queue.pop_front();
    for_each_step(net, m, budget.step_cap(), [&](const TransitionMultiset& step) {
      if (!step_enabled(net, m, step, mode)) return;
      Marking next = fire_step(net, m, step);
      if (!graph.vertices.contains(next)) {
        if (graph.vertices.size() >= budget.max_states) {
          result.status.hit_max_states = true;
          return;
        }
        graph.vertices.insert(next);
        queue.push_back(next);
      }
      graph.edges.insert({m, step, next});
    });
  }
  return result;
}

bool graphs_equal(const LabeledGraph& a, const LabeledGraph& b) {
  return a.vertices == b.vertices && a.edges == b.edges && a.initial == b.initial;
}

bool graphs_equal_on_common_region(const LabeledGraph& a, const LabeledGraph& b) {
  std::set<Marking> common;
  for (const auto& v : a.vertices) {
    if (b.vertices.contains(v)) common.insert(v);
  }
  auto restrict_edges = [&](const LabeledGraph& g) {
    std::set<LabeledGraph::Edge> out;
    for (const auto& e : g.edges) {
      if (common.contains(std::get<0>(e)) && common.contains(std::get<2>(e))) out.insert(e);
    }
    return out;
  };
  return restrict_edges(a) == restrict_edges(b);
}

}  // namespace pncube
