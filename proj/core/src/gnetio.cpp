#include "pncube/gnetio.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

namespace pncube {

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }

  PolyParseResult fail(std::string message) { return {std::nullopt, std::move(message), pos}; }

  bool at_digit() { return !eof() && std::isdigit(static_cast<unsigned char>(peek())); }
  bool at_ident() {
    if (eof()) return false;
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::optional<std::int64_t> parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    try {
      return std::stoll(std::string(text.substr(start, pos - start)));
    } catch (...) {
      pos = start;
      return std::nullopt;
    }
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  PolyParseResult run() {
    FlowPolynomial poly;
    while (true) {
      Monomial mono;
      if (at_digit()) {
        auto coeff = parse_nat();
        if (!coeff) return fail("bad number");
        mono.coeff = *coeff;
        if (!eof() && peek() == '*') {
          ++pos;  // consume '*'
          if (!at_ident()) return fail("expected a place name after '*'");
          if (!parse_vars(&mono)) return fail("expected a place name after '*'");
        }
      } else if (at_ident()) {
        mono.coeff = 1;
        if (!parse_vars(&mono)) return fail("expected a place name after '*'");
      } else {
        return fail("expected a number or place name");
      }
      poly.add_monomial(std::move(mono));
      if (eof()) break;
      if (peek() != '+') return fail("expected '+'");
      ++pos;  // consume '+'
    }
    return {std::move(poly), "", 0};
  }

  bool parse_vars(Monomial* mono) {
    while (true) {
      if (!at_ident()) return false;
      std::string name = parse_ident();
      bool merged = false;
      for (auto& [place, exp] : mono->powers) {
        if (place == name) {
          ++exp;
          merged = true;
          break;
        }
      }
      if (!merged) mono->powers.emplace_back(std::move(name), 1);
      if (eof() || peek() != '*') return true;
      ++pos;  // consume '*'
    }
  }
};

}  // namespace

PolyParseResult parse_poly(std::string_view text) {
  PolyParser parser{text};
  if (parser.eof()) return {std::nullopt, "empty polynomial", 0};
  return parser.run();
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct GnetReader {
  GnetResult& result;

  void error(std::string location, std::string message) {
    result.diagnostics.push_back(
        {ParseDiagnostic::Severity::error, std::move(location), std::move(message)});
  }
  void warn(std::string location, std::string message) {
    result.diagnostics.push_back(
        {ParseDiagnostic::Severity::warning, std::move(location), std::move(message)});
  }

  void check_keys(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
      if (!known.contains(key)) warn(where, "unknown key ignored: " + key);
    }
  }

  std::optional<FlowPolynomial> read_poly(const json& value, const std::string& where) {
    if (value.is_number_unsigned() || value.is_number_integer()) {
      std::int64_t n = value.get<std::int64_t>();
      if (n < 0) {
        error(where, "negative weight");
        return std::nullopt;
      }
      return FlowPolynomial::constant(n);
    }
    if (value.is_string()) {
      auto parsed = parse_poly(value.get<std::string>());
      if (!parsed.ok()) {
        error(where, "bad polynomial at offset " + std::to_string(parsed.error_offset) + ": " +
                         parsed.error);
        return std::nullopt;
      }
      return std::move(parsed.poly);
    }
    error(where, "poly must be a string or a nonnegative integer");
    return std::nullopt;
  }
};

}  // namespace

GnetResult parse_gnet(std::string_view bytes) {
  GnetResult result;
  GnetReader reader{result};

  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    reader.error("byte " + std::to_string(e.byte), e.what());
    return result;
  }
  if (!doc.is_object()) {
    reader.error("/", "top level must be an object");
    return result;
  }
  reader.check_keys(doc, {"places", "transitions"}, "/");

  NetBuilder builder(NetKind::gnet);
  std::set<std::string> place_names, transition_names;
  std::vector<Multiset::Entry> initial;

  const json places = doc.value("places", json::array());
  if (!places.is_array()) {
    reader.error("/places", "places must be an array");
    return result;
  }
  for (std::size_t i = 0; i < places.size(); ++i) {
    std::string where = "/places/" + std::to_string(i);
    const json& p = places[i];
    if (!p.is_object() || !p.contains("name") || !p["name"].is_string()) {
      reader.error(where, "place must be an object with a string name");
      continue;
    }
    reader.check_keys(p, {"name", "initial"}, where);
    std::string name = p["name"].get<std::string>();
    if (!place_names.insert(name).second) {
      reader.error(where, "duplicate place name: " + name);
      continue;
    }
    std::int64_t tokens = 0;
    if (p.contains("initial")) {
      if (!p["initial"].is_number_integer() && !p["initial"].is_number_unsigned()) {
        reader.error(where + "/initial", "initial must be an integer");
        continue;
      }
      tokens = p["initial"].get<std::int64_t>();
      if (tokens < 0) {
        reader.error(where + "/initial", "initial must be nonnegative");
        continue;
      }
    }
    builder.place(name);
    if (tokens > 0) initial.emplace_back(name, tokens);
  }

  const json transitions = doc.value("transitions", json::array());
  if (!transitions.is_array()) {
    reader.error("/transitions", "transitions must be an array");
    return result;
  }
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    std::string where = "/transitions/" + std::to_string(i);
    const json& t = transitions[i];
    if (!t.is_object() || !t.contains("name") || !t["name"].is_string()) {
      reader.error(where, "transition must be an object with a string name");
      continue;
    }
    reader.check_keys(t, {"name", "in", "out"}, where);
    std::string name = t["name"].get<std::string>();
    if (!transition_names.insert(name).second) {
      reader.error(where, "duplicate transition name: " + name);
      continue;
    }
    if (place_names.contains(name)) {
      reader.error(where, "name used as both place and transition: " + name);
      continue;
    }
    builder.transition(name);

    for (const char* side : {"in", "out"}) {
      const json arcs = t.value(side, json::array());
      if (!arcs.is_array()) {
        reader.error(where + "/" + side, "must be an array");
        continue;
      }
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        std::string arc_where = where + "/" + side + "/" + std::to_string(j);
        const json& arc = arcs[j];
        if (!arc.is_object() || !arc.contains("place") || !arc["place"].is_string()) {
          reader.error(arc_where, "arc must be an object with a place name");
          continue;
        }
        reader.check_keys(arc, {"place", "poly"}, arc_where);
        std::string place = arc["place"].get<std::string>();
        if (!place_names.contains(place)) {
          reader.error(arc_where, "unknown place: " + place);
          continue;
        }
        FlowPolynomial weight = FlowPolynomial::constant(1);
        if (arc.contains("poly")) {
          auto parsed = reader.read_poly(arc["poly"], arc_where + "/poly");
          if (!parsed) continue;
          weight = std::move(*parsed);
        }
        for (const auto& v : weight.variables()) {
          if (!place_names.contains(v)) {
            reader.error(arc_where + "/poly", "polynomial references unknown place: " + v);
            weight = FlowPolynomial();
            break;
          }
        }
        if (std::string_view(side) == "in") {
          builder.pre(place, name, std::move(weight));
        } else {
          builder.post(name, place, std::move(weight));
        }
      }
    }
  }

  if (has_errors(result.diagnostics)) return result;
  try {
    result.net = builder.build();
  } catch (const std::exception& e) {
    reader.error("/", e.what());
    return result;
  }
  result.initial = Marking(std::move(initial));
  for (const auto& t : result.net->preset_free_transitions()) {
    reader.warn("transition " + t,
                "preset-free transition: concurrent exploration needs a dimension cap");
  }
  return result;
}

std::string serialize_gnet(const Net& net, const Marking& initial) {
  ordered_json doc;
  doc["places"] = ordered_json::array();
  for (const auto& s : net.places()) {
    ordered_json p;
    p["name"] = s;
    if (initial.count(s) > 0) p["initial"] = initial.count(s);
    doc["places"].push_back(std::move(p));
  }
  doc["transitions"] = ordered_json::array();
  for (const auto& t : net.transitions()) {
    ordered_json entry;
    entry["name"] = t;
    auto arcs_json = [](const std::vector<Net::Arc>& arcs) {
      ordered_json out = ordered_json::array();
      for (const auto& arc : arcs) {
        ordered_json a;
        a["place"] = arc.place;
        if (arc.weight.is_constant()) {
          a["poly"] = arc.weight.constant_value();
        } else {
          a["poly"] = arc.weight.to_string();
        }
        out.push_back(std::move(a));
      }
      return out;
    };
    entry["in"] = arcs_json(net.pre_arcs(t));
    entry["out"] = arcs_json(net.post_arcs(t));
    doc["transitions"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace pncube
