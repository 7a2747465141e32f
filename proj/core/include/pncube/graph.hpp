#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "pncube/multiset.hpp"
#include "pncube/net.hpp"

namespace pncube {

/// Exploration limits. Boundedness of a net is undecidable territory, so
/// every builder stops at these caps and reports which one it hit.
struct Budget {
  std::size_t max_states = 100000;
  std::size_t max_dim = 8;
  /// Cap on concurrent step size; 0 means "same as max_dim".
  std::size_t max_step_size = 0;

  std::size_t step_cap() const { return max_step_size == 0 ? max_dim : max_step_size; }
  void validate() const;
};

/// Which caps an exploration ran into. A capped result is still a valid
/// partial object over the explored region.
struct BuildStatus {
  bool hit_max_states = false;
  bool hit_max_dim = false;

  bool complete() const { return !hit_max_states && !hit_max_dim; }
  BuildStatus operator|(const BuildStatus& o) const {
    return {hit_max_states || o.hit_max_states, hit_max_dim || o.hit_max_dim};
  }
};

/// Graph over markings with transition-multiset edge labels. Interleaved
/// reachability graphs use singleton labels.
struct LabeledGraph {
  using Edge = std::tuple<Marking, TransitionMultiset, Marking>;

  std::set<Marking> vertices;
  std::set<Edge> edges;
  std::optional<Marking> initial;

  void add_edge(const Marking& src, const TransitionMultiset& label, const Marking& dst);
  bool operator==(const LabeledGraph&) const = default;
};

struct GraphResult {
  LabeledGraph graph;
  BuildStatus status;
};

/// Forward closure of the single-transition firing relation from i.
/// Works for all net kinds.
GraphResult reachability_graph(const Net& net, const Marking& i, const Budget& budget);

/// Forward closure of the multiset firing relation from i, per step_enabled.
/// Step sizes are capped at budget.step_cap(). Plain and inhibitor nets only.
GraphResult cs_reachability_graph(const Net& net, const Marking& i, StepMode mode,
                                  const Budget& budget);

/// Exact graph equality (vertices, edges, initial marking).
bool graphs_equal(const LabeledGraph& a, const LabeledGraph& b);

/// Restricts to edges whose endpoints lie in both vertex sets and compares
/// those; used when one side legitimately explores a larger region.
bool graphs_equal_on_common_region(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace pncube
