#pragma once

#include <map>
#include <string>
#include <vector>

#include "pncube/multiset.hpp"
#include "pncube/poly.hpp"

namespace pncube {

enum class NetKind { plain, pni, gnet };

/// How a multiset of transitions is allowed to fire concurrently.
///   cs          -- plain nets: preset covered by the marking.
///   aposteriori -- inhibitor nets: members must not inhibit each other.
///   apriori     -- inhibitor nets: inhibition tested at the source only.
enum class StepMode { cs, aposteriori, apriori };

const char* to_string(NetKind kind);
const char* to_string(StepMode mode);

/// Petri net, net with inhibitor arcs, or generalized self-modifying net.
/// Arc weights are flow polynomials; plain and inhibitor nets carry constant
/// polynomials only, and self-modifying nets have no inhibitor arcs. Places
/// and transitions are disjoint name spaces, each sorted shortlex.
class Net {
 public:
  struct Arc {
    std::string place;
    FlowPolynomial weight;
    bool operator==(const Arc&) const = default;
  };

  Net() = default;

  NetKind kind() const { return kind_; }
  const std::vector<std::string>& places() const { return places_; }
  const std::vector<std::string>& transitions() const { return transitions_; }

  bool has_place(const std::string& s) const;
  bool has_transition(const std::string& t) const;

  /// Input arcs (consumption) of t, sorted by place.
  const std::vector<Arc>& pre_arcs(const std::string& t) const;
  /// Output arcs (production) of t, sorted by place.
  const std::vector<Arc>& post_arcs(const std::string& t) const;
  /// Inhibitor places of t, sorted.
  const std::vector<std::string>& inhibitors(const std::string& t) const;

  /// Constant preset/postset for plain and inhibitor nets.
  Marking preset(const std::string& t) const;
  Marking postset(const std::string& t) const;

  bool is_preset_free(const std::string& t) const;
  std::vector<std::string> preset_free_transitions() const;
  bool has_inhibitors() const;

  bool operator==(const Net&) const = default;

  friend class NetBuilder;

 private:
  NetKind kind_ = NetKind::plain;
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  // Parallel to transitions_.
  std::vector<std::vector<Arc>> pre_;
  std::vector<std::vector<Arc>> post_;
  std::vector<std::vector<std::string>> inhibitors_;

  std::size_t transition_index(const std::string& t) const;
};

/// Assembles a net and enforces the kind invariants at build time.
class NetBuilder {
 public:
  explicit NetBuilder(NetKind kind) { net_.kind_ = kind; }

  NetBuilder& place(const std::string& name);
  NetBuilder& transition(const std::string& name);
  NetBuilder& pre(const std::string& place, const std::string& transition, FlowPolynomial w);
  NetBuilder& post(const std::string& transition, const std::string& place, FlowPolynomial w);
  NetBuilder& pre(const std::string& place, const std::string& transition, std::int64_t w);
  NetBuilder& post(const std::string& transition, const std::string& place, std::int64_t w);
  NetBuilder& inhibitor(const std::string& place, const std::string& transition);

  /// Validates and returns the net. Throws std::invalid_argument on
  /// name clashes, dangling references, or kind violations (non-constant
  /// weights outside gnets, inhibitors outside pnis).
  Net build();

 private:
  struct RawArc {
    std::string place, transition;
    FlowPolynomial weight;
    bool from_place;
  };
  Net net_;
  std::vector<RawArc> arcs_;
  std::vector<std::pair<std::string, std::string>> raw_inhibitors_;
};

struct TransitionEffect {
  Marking consume;
  Marking produce;
  bool operator==(const TransitionEffect&) const = default;
};

/// Consumption and production of t evaluated at marking m (before firing).
/// For plain and inhibitor nets this is (preset, postset) independent of m.
TransitionEffect transition_effect(const Net& net, const std::string& t, const Marking& m);

/// Single-transition firability: consumption covered and all inhibitor
/// places of t empty.
bool enabled(const Net& net, const Marking& m, const std::string& t);

/// New marking after firing t; requires enabled(net, m, t).
Marking fire(const Net& net, const Marking& m, const std::string& t);

/// Preset/postset of a multiset of transitions (plain and inhibitor nets).
Marking step_preset(const Net& net, const TransitionMultiset& step);
Marking step_postset(const Net& net, const TransitionMultiset& step);

/// Multiset firability under the given mode. cs applies to plain nets;
/// aposteriori and apriori to inhibitor nets (plain accepted); self-modifying
/// nets are rejected.
bool step_enabled(const Net& net, const Marking& m, const TransitionMultiset& step,
                  StepMode mode);

/// m - step_preset + step_postset; caller must have checked step_enabled.
Marking fire_step(const Net& net, const Marking& m, const TransitionMultiset& step);

/// Wraps a plain net's constant weights into constant polynomials.
/// Rejects inhibitor nets (self-modifying nets have no inhibitor semantics).
Net embed_to_gnet(const Net& net);

}  // namespace pncube
