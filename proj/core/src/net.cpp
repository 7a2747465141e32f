#include "pncube/net.hpp"

#include <algorithm>
#include <stdexcept>

namespace pncube {

const char* to_string(NetKind kind) {
  switch (kind) {
    case NetKind::plain: return "plain";
    case NetKind::pni: return "pni";
    case NetKind::gnet: return "gnet";
  }
  return "?";
}

const char* to_string(StepMode mode) {
  switch (mode) {
    case StepMode::cs: return "cs";
    case StepMode::aposteriori: return "aposteriori";
    case StepMode::apriori: return "apriori";
  }
  return "?";
}

namespace {

bool sorted_contains(const std::vector<std::string>& v, const std::string& s) {
  auto it = std::lower_bound(v.begin(), v.end(), s, ShortlexLess{});
  return it != v.end() && *it == s;
}

}  // namespace

bool Net::has_place(const std::string& s) const { return sorted_contains(places_, s); }
bool Net::has_transition(const std::string& t) const { return sorted_contains(transitions_, t); }

std::size_t Net::transition_index(const std::string& t) const {
  auto it = std::lower_bound(transitions_.begin(), transitions_.end(), t, ShortlexLess{});
  if (it == transitions_.end() || *it != t)
    throw std::invalid_argument("unknown transition: " + t);
  return static_cast<std::size_t>(it - transitions_.begin());
}

const std::vector<Net::Arc>& Net::pre_arcs(const std::string& t) const {
  return pre_[transition_index(t)];
}

const std::vector<Net::Arc>& Net::post_arcs(const std::string& t) const {
  return post_[transition_index(t)];
}

const std::vector<std::string>& Net::inhibitors(const std::string& t) const {
  return inhibitors_[transition_index(t)];
}

Marking Net::preset(const std::string& t) const {
  if (kind_ == NetKind::gnet) throw std::logic_error("preset of a gnet transition depends on the marking");
  Marking m;
  for (const auto& arc : pre_arcs(t)) m.add(arc.place, arc.weight.constant_value());
  return m;
}

Marking Net::postset(const std::string& t) const {
  if (kind_ == NetKind::gnet) throw std::logic_error("postset of a gnet transition depends on the marking");
  Marking m;
  for (const auto& arc : post_arcs(t)) m.add(arc.place, arc.weight.constant_value());
  return m;
}

bool Net::is_preset_free(const std::string& t) const {
  for (const auto& arc : pre_arcs(t)) {
    if (!arc.weight.is_zero()) return false;
  }
  return true;
}

std::vector<std::string> Net::preset_free_transitions() const {
  std::vector<std::string> out;
  for (const auto& t : transitions_) {
    if (is_preset_free(t)) out.push_back(t);
  }
  return out;
}

bool Net::has_inhibitors() const {
  for (const auto& v : inhibitors_) {
    if (!v.empty()) return true;
  }
  return false;
}

NetBuilder& NetBuilder::place(const std::string& name) {
  net_.places_.push_back(name);
  return *this;
}

NetBuilder& NetBuilder::transition(const std::string& name) {
  net_.transitions_.push_back(name);
  return *this;
}

NetBuilder& NetBuilder::pre(const std::string& place, const std::string& transition,
                            FlowPolynomial w) {
  arcs_.push_back({place, transition, std::move(w), true});
  return *this;
}

NetBuilder& NetBuilder::post(const std::string& transition, const std::string& place,
                             FlowPolynomial w) {
  arcs_.push_back({place, transition, std::move(w), false});
  return *this;
}

NetBuilder& NetBuilder::pre(const std::string& place, const std::string& transition,
                            std::int64_t w) {
  return pre(place, transition, FlowPolynomial::constant(w));
}

NetBuilder& NetBuilder::post(const std::string& transition, const std::string& place,
                             std::int64_t w) {
  return post(transition, place, FlowPolynomial::constant(w));
}

NetBuilder& NetBuilder::inhibitor(const std::string& place, const std::string& transition) {
  raw_inhibitors_.emplace_back(place, transition);
  return *this;
}

Net NetBuilder::build() {
  auto& net = net_;
  std::sort(net.places_.begin(), net.places_.end(), ShortlexLess{});
  std::sort(net.transitions_.begin(), net.transitions_.end(), ShortlexLess{});
  if (std::adjacent_find(net.places_.begin(), net.places_.end()) != net.places_.end())
    throw std::invalid_argument("duplicate place name");
  if (std::adjacent_find(net.transitions_.begin(), net.transitions_.end()) !=
      net.transitions_.end())
    throw std::invalid_argument("duplicate transition name");
  for (const auto& s : net.places_) {
    if (net.has_transition(s))
      throw std::invalid_argument("name used as both place and transition: " + s);
  }

  net.pre_.assign(net.transitions_.size(), {});
  net.post_.assign(net.transitions_.size(), {});
  net.inhibitors_.assign(net.transitions_.size(), {});

  for (auto& arc : arcs_) {
    if (!net.has_place(arc.place)) throw std::invalid_argument("arc references unknown place: " + arc.place);
    if (!net.has_transition(arc.transition))
      throw std::invalid_argument("arc references unknown transition: " + arc.transition);
    if (net.kind_ != NetKind::gnet && !arc.weight.is_constant())
      throw std::invalid_argument("non-constant arc weight requires a gnet");
    for (const auto& v : arc.weight.variables()) {
      if (!net.has_place(v))
        throw std::invalid_argument("arc polynomial references unknown place: " + v);
    }
    auto& slot = (arc.from_place ? net.pre_ : net.post_)[net.transition_index(arc.transition)];
    auto it = std::find_if(slot.begin(), slot.end(),
                           [&](const Net::Arc& a) { return a.place == arc.place; });
    if (it != slot.end()) {
      it->weight += arc.weight;
    } else {
      slot.push_back({arc.place, std::move(arc.weight)});
    }
  }
  for (auto& slot : net.pre_) {
    std::sort(slot.begin(), slot.end(),
              [](const Net::Arc& a, const Net::Arc& b) { return shortlex_less(a.place, b.place); });
  }
  for (auto& slot : net.post_) {
    std::sort(slot.begin(), slot.end(),
              [](const Net::Arc& a, const Net::Arc& b) { return shortlex_less(a.place, b.place); });
  }

  if (!raw_inhibitors_.empty() && net.kind_ != NetKind::pni)
    throw std::invalid_argument("inhibitor arcs require an inhibitor net");
  for (const auto& [place, transition] : raw_inhibitors_) {
    if (!net.has_place(place)) throw std::invalid_argument("inhibitor references unknown place: " + place);
    if (!net.has_transition(transition))
      throw std::invalid_argument("inhibitor references unknown transition: " + transition);
    auto& slot = net.inhibitors_[net.transition_index(transition)];
    if (std::find(slot.begin(), slot.end(), place) == slot.end()) slot.push_back(place);
  }
  for (auto& slot : net.inhibitors_) std::sort(slot.begin(), slot.end(), ShortlexLess{});

  return std::move(net_);
}

TransitionEffect transition_effect(const Net& net, const std::string& t, const Marking& m) {
  TransitionEffect effect;
  for (const auto& arc : net.pre_arcs(t)) effect.consume.add(arc.place, arc.weight.eval(m));
  for (const auto& arc : net.post_arcs(t)) effect.produce.add(arc.place, arc.weight.eval(m));
  return effect;
}

bool enabled(const Net& net, const Marking& m, const std::string& t) {
  for (const auto& s : net.inhibitors(t)) {
    if (m.count(s) != 0) return false;
  }
  return transition_effect(net, t, m).consume.leq(m);
}

Marking fire(const Net& net, const Marking& m, const std::string& t) {
  auto effect = transition_effect(net, t, m);
  for (const auto& s : net.inhibitors(t)) {
    if (m.count(s) != 0) throw std::logic_error("fire: transition is inhibited");
  }
  if (!effect.consume.leq(m)) throw std::logic_error("fire: transition not enabled");
  return m - effect.consume + effect.produce;
}

Marking step_preset(const Net& net, const TransitionMultiset& step) {
  Marking out;
  for (const auto& [t, n] : step) {
    Marking pre = net.preset(t);
    for (std::int64_t i = 0; i < n; ++i) out += pre;
  }
  return out;
}

Marking step_postset(const Net& net, const TransitionMultiset& step) {
  Marking out;
  for (const auto& [t, n] : step) {
    Marking post = net.postset(t);
    for (std::int64_t i = 0; i < n; ++i) out += post;
  }
  return out;
}

bool step_enabled(const Net& net, const Marking& m, const TransitionMultiset& step,
                  StepMode mode) {
  if (step.empty()) throw std::invalid_argument("step_enabled: empty step");
  if (net.kind() == NetKind::gnet)
    throw std::invalid_argument("step_enabled: no concurrent step rule for gnets");
  if (mode == StepMode::cs && net.kind() != NetKind::plain)
    throw std::invalid_argument("step_enabled: cs mode applies to plain nets only");

  if (!step_preset(net, step).leq(m)) return false;
  if (mode == StepMode::cs) return true;

  for (const auto& [t, n] : step) {
    for (const auto& s : net.inhibitors(t)) {
      if (m.count(s) != 0) return false;
    }
  }
  if (mode == StepMode::apriori) return true;

  // Members of the step must not produce tokens into each other's inhibitor
  // places; a transition counts against itself when it fires more than once.
  for (const auto& [t1, n1] : step) {
    Marking post1 = net.postset(t1);
    if (post1.empty()) continue;
    for (const auto& [t2, n2] : step) {
      if (t1 == t2 && n1 < 2) continue;
      for (const auto& s : net.inhibitors(t2)) {
        if (post1.count(s) != 0) return false;
      }
    }
  }
  return true;
}

Marking fire_step(const Net& net, const Marking& m, const TransitionMultiset& step) {
  Marking pre = step_preset(net, step);
  if (!pre.leq(m)) throw std::logic_error("fire_step: step not enabled");
  return m - pre + step_postset(net, step);
}

Net embed_to_gnet(const Net& net) {
  if (net.kind() == NetKind::pni)
    throw std::invalid_argument("embed_to_gnet: gnets have no inhibitor semantics");
  if (net.kind() == NetKind::gnet) return net;
  NetBuilder builder(NetKind::gnet);
  for (const auto& s : net.places()) builder.place(s);
  for (const auto& t : net.transitions()) {
    builder.transition(t);
    for (const auto& arc : net.pre_arcs(t)) builder.pre(arc.place, t, arc.weight);
    for (const auto& arc : net.post_arcs(t)) builder.post(t, arc.place, arc.weight);
  }
  return builder.build();
}

}  // namespace pncube
