#include "pncube/stgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace pncube {

std::size_t STGraph::dim() const {
  std::size_t d = 0;
  for (const auto& q : states) d = std::max(d, q.dim());
  return d;
}

namespace {

struct StKeyLess {
  bool operator()(const STState& a, const STState& b) const {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  }
};

}  // namespace

STResult build_st(const Net& net_in, const Marking& i, const Budget& budget) {
  budget.validate();
  if (net_in.kind() == NetKind::pni)
    throw std::invalid_argument("build_st: no inhibitor semantics for self-modifying nets");
  const Net net = net_in.kind() == NetKind::gnet ? net_in : embed_to_gnet(net_in);

  // Marking-independent part of each transition's effect; subtracting it
  // from the evaluated effect yields the canonical memory entry.
  std::map<std::string, TransitionEffect> constant_effect;
  for (const auto& t : net.transitions()) {
    constant_effect[t] = transition_effect(net, t, Marking{});
  }

  STResult result;
  std::vector<STState> states;
  std::map<STState, std::size_t> index;
  std::vector<STEdge> edges;
  std::deque<std::size_t> queue;

  auto ensure = [&](STState q) -> std::optional<std::size_t> {
    auto it = index.find(q);
    if (it != index.end()) return it->second;
    if (states.size() >= budget.max_states) {
      result.status.hit_max_states = true;
      return std::nullopt;
    }
    states.push_back(q);
    index.emplace(std::move(q), states.size() - 1);
    queue.push_back(states.size() - 1);
    return states.size() - 1;
  };

  ensure(STState{i, Conclist{}, {}});
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    const STState state = states[cur];

    if (state.dim() < budget.max_dim) {
      for (const auto& t : net.transitions()) {
        TransitionEffect eff = transition_effect(net, t, state.marking);
        if (!eff.consume.leq(state.marking)) continue;
        const TransitionEffect& base = constant_effect[t];
        MemoryEntry entry{eff.consume - base.consume, eff.produce - base.produce};
        auto [conclist, pos] = state.conclist.insert(t);
        std::vector<MemoryEntry> memory = state.memory;
        memory.insert(memory.begin() + static_cast<std::ptrdiff_t>(pos), std::move(entry));
        STState target{state.marking - eff.consume, std::move(conclist), std::move(memory)};
        if (auto dst = ensure(std::move(target))) {
          edges.push_back({cur, STEdge::Kind::start, pos, *dst});
        }
      }
    } else {
      for (const auto& t : net.transitions()) {
        if (transition_effect(net, t, state.marking).consume.leq(state.marking)) {
          result.status.hit_max_dim = true;
          break;
        }
      }
    }

    for (std::size_t j = 0; j < state.dim(); ++j) {
      const std::string& t = state.conclist.label(j);
      Marking produce = state.memory[j].produce + constant_effect[t].produce;
      std::vector<MemoryEntry> memory = state.memory;
      memory.erase(memory.begin() + static_cast<std::ptrdiff_t>(j));
      STState target{state.marking + produce, state.conclist.remove({j}), std::move(memory)};
      if (auto dst = ensure(std::move(target))) {
        edges.push_back({cur, STEdge::Kind::terminate, j, *dst});
      }
    }
  }

  // Deterministic ids: order states by (dimension, conclist, marking, memory).
  std::vector<std::size_t> order(states.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return StKeyLess{}(states[a], states[b]); });
  std::vector<std::size_t> remap(states.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) remap[order[rank]] = rank;

  auto& graph = result.graph;
  graph.alphabet = net.transitions();
  graph.states.resize(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) graph.states[remap[k]] = std::move(states[k]);
  for (auto& e : edges) {
    e.src = remap[e.src];
    e.dst = remap[e.dst];
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  graph.edges = std::move(edges);
  graph.initial = {remap[0]};
  return result;
}

std::vector<STViolation> validate_st(const STGraph& g) {
  std::vector<STViolation> out;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    if (g.states[i].memory.size() != g.states[i].dim())
      out.push_back({i, "memory length differs from conclist length"});
  }
  for (const auto& e : g.edges) {
    if (e.src >= g.states.size() || e.dst >= g.states.size()) {
      out.push_back({e.src, "edge endpoint out of range"});
      continue;
    }
    const STState& small = e.kind == STEdge::Kind::start ? g.states[e.src] : g.states[e.dst];
    const STState& big = e.kind == STEdge::Kind::start ? g.states[e.dst] : g.states[e.src];
    if (e.position >= big.dim()) {
      out.push_back({e.src, "edge position out of range"});
      continue;
    }
    if (big.conclist.remove({e.position}) != small.conclist)
      out.push_back({e.src, "edge label condition violated: conclists do not match"});
    if (big.memory.size() == big.dim() && small.memory.size() == small.dim()) {
      std::vector<MemoryEntry> reduced = big.memory;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(e.position));
      if (reduced != small.memory)
        out.push_back({e.src, "edge label condition violated: memories do not match"});
    }
  }
  for (std::size_t i : g.initial) {
    if (i >= g.states.size()) out.push_back({i, "initial state index out of range"});
  }
  return out;
}

LabeledGraph st_truncate1(const STGraph& g) {
  LabeledGraph out;
  for (const auto& q : g.states) {
    if (q.dim() == 0) out.vertices.insert(q.marking);
  }
  std::map<std::size_t, std::vector<std::size_t>> starts_into;  // 1-dim state -> 0-dim sources
  std::map<std::size_t, std::vector<std::size_t>> terms_out;    // 1-dim state -> 0-dim targets
  for (const auto& e : g.edges) {
    if (e.kind == STEdge::Kind::start && g.states[e.dst].dim() == 1) {
      starts_into[e.dst].push_back(e.src);
    }
    if (e.kind == STEdge::Kind::terminate && g.states[e.src].dim() == 1) {
      terms_out[e.src].push_back(e.dst);
    }
  }
  for (const auto& [x, sources] : starts_into) {
    auto it = terms_out.find(x);
    if (it == terms_out.end()) continue;
    TransitionMultiset label;
    label.add(g.states[x].conclist.label(0), 1);
    for (std::size_t src : sources) {
      for (std::size_t dst : it->second) {
        out.add_edge(g.states[src].marking, label, g.states[dst].marking);
      }
    }
  }
  for (std::size_t i : g.initial) {
    if (g.states[i].dim() == 0) {
      out.initial = g.states[i].marking;
      break;
    }
  }
  return out;
}

}  // namespace pncube
