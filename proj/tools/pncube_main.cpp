// pncube: translate Petri nets (plain, inhibitor, self-modifying) into
// higher-dimensional automata, partial HDAs and ST-automata, with
// statistics, structure validation, and executable correctness checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pncube/build.hpp"
#include "pncube/gnetio.hpp"
#include "pncube/jsonio.hpp"
#include "pncube/oracles.hpp"
#include "pncube/pnml.hpp"
#include "pncube/stgraph.hpp"

namespace {

using namespace pncube;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCheck = 3;

struct CommonFlags {
  std::string input;
  std::string input_format;  // "", "pnml", "gnet"
  std::string semantics = "hda";
  std::string output;
  std::size_t max_cells = 100000;
  std::size_t max_dim = 8;
  std::size_t max_step_size = 0;

  Budget budget() const { return {max_cells, max_dim, max_step_size}; }
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags, bool with_output) {
  cmd->add_option("--input", flags->input, "Net file (.pnml or .gnet.json)")->required();
  cmd->add_option("--input-format", flags->input_format, "Override format detection")
      ->check(CLI::IsMember({"pnml", "gnet"}));
  cmd->add_option("--semantics", flags->semantics, "Translation to apply")
      ->check(CLI::IsMember({"hda", "aposteriori", "apriori", "st"}));
  if (with_output) cmd->add_option("--output", flags->output, "Output path (default stdout)");
  cmd->add_option("--max-cells", flags->max_cells, "State/cell budget");
  cmd->add_option("--max-dim", flags->max_dim, "Dimension cap");
  cmd->add_option("--max-step-size", flags->max_step_size,
                  "Concurrent step size cap (default: same as --max-dim)");
}

struct LoadedNet {
  Net net;
  Marking initial;
};

std::optional<LoadedNet> load_net(const CommonFlags& flags) {
  std::ifstream in(flags.input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << flags.input << "\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();

  std::string format = flags.input_format;
  if (format.empty()) {
    if (flags.input.ends_with(".pnml") || flags.input.ends_with(".xml")) {
      format = "pnml";
    } else if (flags.input.ends_with(".gnet.json") || flags.input.ends_with(".json")) {
      format = "gnet";
    } else {
      std::cerr << "error: cannot infer input format of " << flags.input
                << "; use --input-format\n";
      return std::nullopt;
    }
  }

  if (format == "pnml") {
    PnmlResult parsed = parse_pnml(bytes);
    for (const auto& d : parsed.diagnostics) std::cerr << to_string(d) << "\n";
    if (!parsed.ok()) return std::nullopt;
    return LoadedNet{std::move(*parsed.net), std::move(parsed.initial)};
  }
  GnetResult parsed = parse_gnet(bytes);
  for (const auto& d : parsed.diagnostics) std::cerr << to_string(d) << "\n";
  if (!parsed.ok()) return std::nullopt;
  return LoadedNet{std::move(*parsed.net), std::move(parsed.initial)};
}

bool write_output(const CommonFlags& flags, const std::string& content) {
  if (flags.output.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(flags.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << flags.output << "\n";
    return false;
  }
  out << content;
  return true;
}

int budget_note(const BuildStatus& status) {
  if (status.complete()) return kExitOk;
  std::cerr << "note: partial result, budget exceeded (";
  if (status.hit_max_states) std::cerr << "max-cells";
  if (status.hit_max_states && status.hit_max_dim) std::cerr << ", ";
  if (status.hit_max_dim) std::cerr << "max-dim";
  std::cerr << ")\n";
  return kExitBudget;
}

int run_convert(const CommonFlags& flags, const std::string& format) {
  auto loaded = load_net(flags);
  if (!loaded) return kExitParse;
  Semantics sem = *parse_semantics(flags.semantics);
  try {
    if (sem == Semantics::st) {
      STResult result = build_st(loaded->net, loaded->initial, flags.budget());
      std::string out =
          format == "json" ? st_to_json(result.graph) : st_to_dot(result.graph, "st_automaton");
      if (!write_output(flags, out)) return kExitParse;
      return budget_note(result.status);
    }
    ComplexResult result =
        sem == Semantics::hda ? build_hda(loaded->net, loaded->initial, flags.budget())
                              : build_phda(loaded->net, loaded->initial, sem, flags.budget());
    std::string out = format == "json"
                          ? complex_to_json(result.complex)
                          : graph_to_dot(result.complex.skeleton1(), "truncation1");
    if (!write_output(flags, out)) return kExitParse;
    return budget_note(result.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int run_stats(const CommonFlags& flags) {
  auto loaded = load_net(flags);
  if (!loaded) return kExitParse;
  Semantics sem = *parse_semantics(flags.semantics);
  try {
    if (sem == Semantics::st) {
      STResult result = build_st(loaded->net, loaded->initial, flags.budget());
      if (!write_output(flags, stats_csv(result.graph))) return kExitParse;
      return budget_note(result.status);
    }
    ComplexResult result =
        sem == Semantics::hda ? build_hda(loaded->net, loaded->initial, flags.budget())
                              : build_phda(loaded->net, loaded->initial, sem, flags.budget());
    if (!write_output(flags, stats_csv(result.complex))) return kExitParse;
    return budget_note(result.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int run_check(const CommonFlags& flags, const std::string& lemma) {
  auto loaded = load_net(flags);
  if (!loaded) return kExitParse;
  Semantics sem = *parse_semantics(flags.semantics);
  bool want_truncation = lemma == "truncation" || lemma == "all";
  bool want_flatten = lemma == "flatten" || lemma == "all";
  if (sem == Semantics::st) {
    if (lemma == "flatten") {
      std::cerr << "error: the flattening check applies to cell semantics only\n";
      return kExitParse;
    }
    want_flatten = false;
  }

  bool failed = false;
  bool bounded = false;
  try {
    if (want_truncation) {
      OracleReport report = check_truncation(loaded->net, loaded->initial, sem, flags.budget());
      std::cout << "truncation: " << (report.pass ? "PASS" : "FAIL")
                << (report.bounded ? " (bounded)" : "") << "\n";
      if (!report.pass) {
        failed = true;
        std::cerr << report.detail << "\n";
      }
      bounded |= report.bounded;
    }
    if (want_flatten) {
      OracleReport report = check_flatten(loaded->net, loaded->initial, sem, flags.budget());
      std::cout << "flatten: " << (report.pass ? "PASS" : "FAIL")
                << (report.bounded ? " (bounded)" : "") << "\n";
      if (!report.pass) {
        failed = true;
        std::cerr << report.detail << "\n";
      }
      bounded |= report.bounded;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (failed) return kExitCheck;
  if (bounded) return kExitBudget;
  return kExitOk;
}

int run_validate(const CommonFlags& flags, const std::string& load_complex) {
  try {
    if (!load_complex.empty()) {
      std::ifstream in(load_complex, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open " << load_complex << "\n";
        return kExitParse;
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      ComplexLoadResult loaded = complex_from_json(buffer.str());
      for (const auto& d : loaded.diagnostics) std::cerr << to_string(d) << "\n";
      if (!loaded.ok()) return kExitParse;
      auto violations = loaded.complex->validate();
      for (const auto& v : violations) {
        std::cout << "cell " << (v.cell ? std::to_string(*v.cell) : std::string("-")) << ": "
                  << v.message << "\n";
      }
      return violations.empty() ? kExitOk : kExitCheck;
    }

    auto loaded = load_net(flags);
    if (!loaded) return kExitParse;
    Semantics sem = *parse_semantics(flags.semantics);
    if (sem == Semantics::st) {
      STResult result = build_st(loaded->net, loaded->initial, flags.budget());
      auto violations = validate_st(result.graph);
      for (const auto& v : violations) {
        std::cout << "state " << v.state << ": " << v.message << "\n";
      }
      if (!violations.empty()) return kExitCheck;
      return budget_note(result.status);
    }
    ComplexResult result =
        sem == Semantics::hda ? build_hda(loaded->net, loaded->initial, flags.budget())
                              : build_phda(loaded->net, loaded->initial, sem, flags.budget());
    auto violations = result.complex.validate();
    for (const auto& v : violations) {
      std::cout << "cell " << (v.cell ? std::to_string(*v.cell) : std::string("-")) << ": "
                << v.message << "\n";
    }
    if (!violations.empty()) return kExitCheck;
    return budget_note(result.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petri nets to higher-dimensional automata and ST-automata"};
  app.require_subcommand(1);

  CommonFlags convert_flags;
  std::string convert_format = "json";
  CLI::App* convert = app.add_subcommand("convert", "Translate a net and emit the state space");
  add_common_flags(convert, &convert_flags, true);
  convert->add_option("--format", convert_format, "json (full complex) or dot (1-truncation)")
      ->check(CLI::IsMember({"json", "dot"}));

  CommonFlags stats_flags;
  CLI::App* stats = app.add_subcommand("stats", "Per-dimension cell statistics as CSV");
  add_common_flags(stats, &stats_flags, true);

  CommonFlags check_flags;
  std::string lemma = "all";
  CLI::App* check = app.add_subcommand("check", "Run the correctness oracles");
  add_common_flags(check, &check_flags, false);
  check->add_option("--lemma", lemma, "truncation, flatten, or all")
      ->check(CLI::IsMember({"truncation", "flatten", "all"}));

  CommonFlags validate_flags;
  std::string load_complex;
  CLI::App* validate = app.add_subcommand("validate", "Check the face-map identities");
  add_common_flags(validate, &validate_flags, false);
  validate->add_option("--load-complex", load_complex, "Validate a serialized complex instead")
      ->group("");
  validate->get_option("--input")->required(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  if (convert->parsed()) return run_convert(convert_flags, convert_format);
  if (stats->parsed()) return run_stats(stats_flags);
  if (check->parsed()) return run_check(check_flags, lemma);
  if (validate->parsed()) {
    if (load_complex.empty() && validate_flags.input.empty()) {
      std::cerr << "error: validate needs --input or --load-complex\n";
      return kExitParse;
    }
    return run_validate(validate_flags, load_complex);
  }
  return kExitParse;
}
