#include "pncube/jsonio.hpp"

#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pncube {

namespace {

using nlohmann::ordered_json;

ordered_json marking_json(const Marking& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [place, n] : m) out[place] = n;
  return out;
}

std::optional<Marking> marking_from_json(const ordered_json& j, std::string* error) {
  if (!j.is_object()) {
    *error = "marking must be an object";
    return std::nullopt;
  }
  std::vector<Multiset::Entry> entries;
  for (const auto& [place, n] : j.items()) {
    if (!n.is_number_integer() && !n.is_number_unsigned()) {
      *error = "marking counts must be integers";
      return std::nullopt;
    }
    std::int64_t v = n.get<std::int64_t>();
    if (v < 0) {
      *error = "marking counts must be nonnegative";
      return std::nullopt;
    }
    entries.emplace_back(place, v);
  }
  return Marking(std::move(entries));
}

ordered_json events_json(EventMask mask) {
  ordered_json out = ordered_json::array();
  for (std::size_t e : events_of(mask)) out.push_back(e);
  return out;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string complex_to_json(const Complex& x) {
  ordered_json doc;
  doc["alphabet"] = x.alphabet();
  doc["cells"] = ordered_json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Cell& cell = x.cell(i);
    ordered_json c;
    c["id"] = i;
    c["marking"] = marking_json(cell.marking);
    c["conclist"] = cell.conclist.labels();
    c["faces"] = ordered_json::array();
    for (const auto& f : x.faces(i)) {
      ordered_json face;
      face["A"] = events_json(f.a);
      face["B"] = events_json(f.b);
      face["target"] = f.target;
      c["faces"].push_back(std::move(face));
    }
    doc["cells"].push_back(std::move(c));
  }
  doc["initial"] = x.initial();
  doc["partial"] = x.partial();
  return doc.dump(2) + "\n";
}

ComplexLoadResult complex_from_json(std::string_view bytes) {
  ComplexLoadResult result;
  auto error = [&](std::string location, std::string message) {
    result.diagnostics.push_back(
        {ParseDiagnostic::Severity::error, std::move(location), std::move(message)});
  };

  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    error("byte " + std::to_string(e.byte), e.what());
    return result;
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
    error("/", "expected an object with a cells array");
    return result;
  }

  std::vector<std::string> alphabet;
  if (doc.contains("alphabet") && doc["alphabet"].is_array()) {
    for (const auto& t : doc["alphabet"]) {
      if (t.is_string()) alphabet.push_back(t.get<std::string>());
    }
  }
  Complex x(alphabet, doc.value("partial", false));

  const ordered_json& cells = doc["cells"];
  // First pass creates the cells so faces can point forward.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string where = "/cells/" + std::to_string(i);
    const ordered_json& c = cells[i];
    if (!c.is_object() || !c.contains("marking") || !c.contains("conclist") ||
        !c["conclist"].is_array()) {
      error(where, "cell must have a marking object and a conclist array");
      return result;
    }
    std::string marking_error;
    auto marking = marking_from_json(c["marking"], &marking_error);
    if (!marking) {
      error(where + "/marking", marking_error);
      return result;
    }
    std::vector<std::string> labels;
    for (const auto& t : c["conclist"]) {
      if (!t.is_string()) {
        error(where + "/conclist", "labels must be strings");
        return result;
      }
      labels.push_back(t.get<std::string>());
    }
    // Keep the stored label order: a non-canonical conclist is a validation
    // finding, not a load failure. Duplicated cell keys load too.
    Cell cell{std::move(*marking), Conclist(std::move(labels))};
    x.add_cell_unchecked(std::move(cell));
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string where = "/cells/" + std::to_string(i) + "/faces";
    for (const auto& f : cells[i].value("faces", ordered_json::array())) {
      if (!f.is_object() || !f.contains("target")) {
        error(where, "face must have A, B and target");
        return result;
      }
      auto read_mask = [&](const char* key) -> std::optional<EventMask> {
        EventMask mask = 0;
        for (const auto& e : f.value(key, ordered_json::array())) {
          if (!e.is_number_unsigned() || e.get<std::size_t>() >= 15) return std::nullopt;
          mask |= EventMask(1) << e.get<std::size_t>();
        }
        return mask;
      };
      auto a = read_mask("A");
      auto b = read_mask("B");
      if (!a || !b || !f["target"].is_number_unsigned()) {
        error(where, "bad face entry");
        return result;
      }
      std::size_t target = f["target"].get<std::size_t>();
      if (target >= x.size() || ((*a | *b) == 0) || (*a & *b)) {
        error(where, "face target or event sets out of range");
        return result;
      }
      x.set_face(i, *a, *b, target);
    }
  }

  for (const auto& idx : doc.value("initial", ordered_json::array())) {
    if (idx.is_number_unsigned() && idx.get<std::size_t>() < x.size()) {
      x.add_initial(idx.get<std::size_t>());
    } else {
      error("/initial", "initial cell index out of range");
      return result;
    }
  }

  result.complex = std::move(x);
  return result;
}

std::string st_to_json(const STGraph& g) {
  ordered_json doc;
  doc["alphabet"] = g.alphabet;
  doc["states"] = ordered_json::array();
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    const STState& q = g.states[i];
    ordered_json s;
    s["id"] = i;
    s["marking"] = marking_json(q.marking);
    s["conclist"] = q.conclist.labels();
    s["memory"] = ordered_json::array();
    for (const auto& entry : q.memory) {
      ordered_json e;
      e["consume"] = marking_json(entry.consume);
      e["produce"] = marking_json(entry.produce);
      s["memory"].push_back(std::move(e));
    }
    doc["states"].push_back(std::move(s));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json edge;
    edge["src"] = e.src;
    edge["kind"] = e.kind == STEdge::Kind::start ? "start" : "terminate";
    edge["position"] = e.position;
    edge["dst"] = e.dst;
    doc["edges"].push_back(std::move(edge));
  }
  doc["initial"] = g.initial;
  return doc.dump(2) + "\n";
}

std::string graph_to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& v : g.vertices) {
    os << "  " << quote_dot(v.to_string());
    if (g.initial && *g.initial == v) os << " [peripheries=2]";
    os << ";\n";
  }
  for (const auto& [src, label, dst] : g.edges) {
    os << "  " << quote_dot(src.to_string()) << " -> " << quote_dot(dst.to_string())
       << " [label=" << quote_dot(label.to_string()) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string st_to_dot(const STGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    const STState& q = g.states[i];
    std::string label = q.marking.to_string();
    if (q.dim() > 0) {
      label = "(" + label + ", " + q.conclist.to_string() + ", [";
      for (std::size_t j = 0; j < q.memory.size(); ++j) {
        if (j > 0) label += "; ";
        label += q.memory[j].consume.to_string() + "/" + q.memory[j].produce.to_string();
      }
      label += "])";
    }
    os << "  q" << i << " [label=" << quote_dot(label);
    for (std::size_t init : g.initial) {
      if (init == i) {
        os << " peripheries=2";
        break;
      }
    }
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    const STState& big = e.kind == STEdge::Kind::start ? g.states[e.dst] : g.states[e.src];
    std::string label = big.conclist.label(e.position);
    label += e.kind == STEdge::Kind::start ? "+" : "-";
    os << "  q" << e.src << " -> q" << e.dst << " [label=" << quote_dot(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

struct DimStats {
  std::size_t cells = 0;
  std::set<Conclist> conclists;
  std::set<Marking> markings;
};

std::string stats_to_csv(const std::map<std::size_t, DimStats>& stats) {
  std::ostringstream os;
  os << "dimension,num_cells,num_unique_conclists,num_unique_markings\n";
  for (const auto& [dim, s] : stats) {
    os << dim << ',' << s.cells << ',' << s.conclists.size() << ',' << s.markings.size() << '\n';
  }
  return os.str();
}

}  // namespace

std::string stats_csv(const Complex& x) {
  std::map<std::size_t, DimStats> stats;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Cell& c = x.cell(i);
    auto& s = stats[c.dim()];
    ++s.cells;
    s.conclists.insert(c.conclist);
    s.markings.insert(c.marking);
  }
  return stats_to_csv(stats);
}

std::string stats_csv(const STGraph& g) {
  std::map<std::size_t, DimStats> stats;
  for (const auto& q : g.states) {
    auto& s = stats[q.dim()];
    ++s.cells;
    s.conclists.insert(q.conclist);
    s.markings.insert(q.marking);
  }
  return stats_to_csv(stats);
}

}  // namespace pncube
