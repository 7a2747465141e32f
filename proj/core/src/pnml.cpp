#include "pncube/pnml.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pncube/xml.hpp"

namespace pncube {

namespace {

std::string at_byte(std::size_t offset) { return "byte " + std::to_string(offset); }

struct PnmlReader {
  std::vector<ParseDiagnostic>& diags;
  std::set<std::string> warned_elements;

  std::map<std::string, std::int64_t> place_tokens;  // id -> initial tokens
  std::vector<std::pair<std::string, std::size_t>> places;
  std::vector<std::pair<std::string, std::size_t>> transitions;
  struct RawArc {
    std::string source, target;
    std::int64_t weight = 1;
    bool inhibitor = false;
    std::size_t offset = 0;
  };
  std::vector<RawArc> arcs;

  void error(std::size_t offset, std::string message) {
    diags.push_back({ParseDiagnostic::Severity::error, at_byte(offset), std::move(message)});
  }
  void warn(std::size_t offset, std::string message) {
    diags.push_back({ParseDiagnostic::Severity::warning, at_byte(offset), std::move(message)});
  }

  std::optional<std::int64_t> read_int(const XmlNode& holder, std::int64_t fallback) {
    const XmlNode* text = holder.child("text");
    const std::string& raw = text ? text->text : holder.text;
    if (raw.empty()) return fallback;
    try {
      std::size_t used = 0;
      std::int64_t value = std::stoll(raw, &used);
      if (used != raw.size()) throw std::invalid_argument(raw);
      if (value < 0) {
        error(holder.offset, "negative number: " + raw);
        return std::nullopt;
      }
      return value;
    } catch (...) {
      error(holder.offset, "not an integer: " + raw);
      return std::nullopt;
    }
  }

  void read_place(const XmlNode& node) {
    const std::string* id = node.attr("id");
    if (!id) {
      error(node.offset, "place without id");
      return;
    }
    std::int64_t tokens = 0;
    if (const XmlNode* marking = node.child("initialMarking")) {
      if (auto value = read_int(*marking, 0)) tokens = *value;
    }
    places.emplace_back(*id, node.offset);
    place_tokens[*id] = tokens;
  }

  void read_transition(const XmlNode& node) {
    const std::string* id = node.attr("id");
    if (!id) {
      error(node.offset, "transition without id");
      return;
    }
    transitions.emplace_back(*id, node.offset);
  }

  void read_arc(const XmlNode& node) {
    const std::string* source = node.attr("source");
    const std::string* target = node.attr("target");
    if (!source || !target) {
      error(node.offset, "arc without source/target");
      return;
    }
    RawArc arc{*source, *target, 1, false, node.offset};
    if (const XmlNode* inscription = node.child("inscription")) {
      if (auto value = read_int(*inscription, 1)) {
        arc.weight = *value;
      } else {
        return;
      }
    }
    if (const XmlNode* type = node.child("type")) {
      const std::string* value = type->attr("value");
      std::string kind = value ? *value : type->text;
      if (kind == "inhibitor") {
        arc.inhibitor = true;
      } else if (!kind.empty() && kind != "normal") {
        warn(type->offset, "unknown arc type ignored: " + kind);
      }
    }
    arcs.push_back(std::move(arc));
  }

  void read_children(const XmlNode& node) {
    for (const auto& child : node.children) {
      if (child.name == "place") {
        read_place(child);
      } else if (child.name == "transition") {
        read_transition(child);
      } else if (child.name == "arc") {
        read_arc(child);
      } else if (child.name == "page") {
        read_children(child);
      } else if (child.name == "name" || child.name == "graphics" ||
                 child.name == "toolspecific" || child.name == "declaration") {
        // Core-model elements we have no use for.
      } else if (warned_elements.insert(child.name).second) {
        warn(child.offset, "unknown element skipped: " + child.name);
      }
    }
  }
};

}  // namespace

PnmlResult parse_pnml(std::string_view bytes) {
  PnmlResult result;
  XmlResult xml = parse_xml(bytes);
  if (!xml.ok()) {
    result.diagnostics.push_back({ParseDiagnostic::Severity::error, at_byte(xml.error_offset),
                                  "ill-formed XML: " + xml.error});
    return result;
  }

  const XmlNode* root = &*xml.root;
  std::vector<const XmlNode*> nets;
  if (root->name == "net") {
    nets.push_back(root);
  } else if (root->name == "pnml") {
    for (const auto& child : root->children) {
      if (child.name == "net") nets.push_back(&child);
    }
  } else {
    result.diagnostics.push_back({ParseDiagnostic::Severity::error, at_byte(root->offset),
                                  "expected a pnml or net root element, got " + root->name});
    return result;
  }
  if (nets.empty()) {
    result.diagnostics.push_back(
        {ParseDiagnostic::Severity::error, at_byte(root->offset), "no net element"});
    return result;
  }
  if (nets.size() > 1) {
    result.diagnostics.push_back({ParseDiagnostic::Severity::warning, at_byte(nets[1]->offset),
                                  "multiple nets; using the first"});
  }

  PnmlReader reader{result.diagnostics};
  reader.read_children(*nets[0]);

  // Resolve arcs against the collected ids.
  std::set<std::string> place_ids, transition_ids;
  for (const auto& [id, offset] : reader.places) {
    if (!place_ids.insert(id).second) reader.error(offset, "duplicate place id: " + id);
  }
  for (const auto& [id, offset] : reader.transitions) {
    if (!transition_ids.insert(id).second) reader.error(offset, "duplicate transition id: " + id);
    if (place_ids.contains(id)) reader.error(offset, "id used as both place and transition: " + id);
  }

  bool any_inhibitor = false;
  for (const auto& arc : reader.arcs) {
    bool src_place = place_ids.contains(arc.source);
    bool src_trans = transition_ids.contains(arc.source);
    bool dst_place = place_ids.contains(arc.target);
    bool dst_trans = transition_ids.contains(arc.target);
    if ((!src_place && !src_trans) || (!dst_place && !dst_trans)) {
      reader.error(arc.offset, "arc references unknown node: " + arc.source + " -> " + arc.target);
      continue;
    }
    if (src_place && dst_trans) {
      if (arc.inhibitor) any_inhibitor = true;
    } else if (src_trans && dst_place) {
      if (arc.inhibitor) reader.error(arc.offset, "inhibitor arc must go from place to transition");
    } else {
      reader.error(arc.offset, "arc must connect a place and a transition");
    }
  }

  if (has_errors(result.diagnostics)) return result;

  NetBuilder builder(any_inhibitor ? NetKind::pni : NetKind::plain);
  for (const auto& [id, _] : reader.places) builder.place(id);
  for (const auto& [id, _] : reader.transitions) builder.transition(id);
  for (const auto& arc : reader.arcs) {
    bool src_place = place_ids.contains(arc.source);
    if (arc.inhibitor) {
      builder.inhibitor(arc.source, arc.target);
      continue;
    }
    if (arc.weight == 0) {
      reader.warn(arc.offset, "zero-weight arc ignored");
      continue;
    }
    if (src_place) {
      builder.pre(arc.source, arc.target, arc.weight);
    } else {
      builder.post(arc.source, arc.target, arc.weight);
    }
  }

  try {
    result.net = builder.build();
  } catch (const std::exception& e) {
    result.diagnostics.push_back(
        {ParseDiagnostic::Severity::error, at_byte(nets[0]->offset), e.what()});
    return result;
  }

  std::vector<Multiset::Entry> initial;
  for (const auto& [id, tokens] : reader.place_tokens) {
    if (tokens > 0) initial.emplace_back(id, tokens);
  }
  result.initial = Marking(std::move(initial));

  for (const auto& t : result.net->preset_free_transitions()) {
    result.diagnostics.push_back(
        {ParseDiagnostic::Severity::warning, "transition " + t,
         "preset-free transition: concurrent exploration needs a dimension cap"});
  }
  return result;
}

}  // namespace pncube
