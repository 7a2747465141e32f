#include "pncube/oracles.hpp"

#include <sstream>
#include <stdexcept>

namespace pncube {

namespace {

std::string summarize_mismatch(const LabeledGraph& a, const LabeledGraph& b,
                               const char* a_name, const char* b_name) {
  std::ostringstream os;
  os << a_name << ": " << a.vertices.size() << " vertices, " << a.edges.size() << " edges; "
     << b_name << ": " << b.vertices.size() << " vertices, " << b.edges.size() << " edges";
  for (const auto& e : a.edges) {
    if (!b.edges.contains(e)) {
      os << "; only in " << a_name << ": (" << std::get<0>(e).to_string() << ", "
         << std::get<1>(e).to_string() << ", " << std::get<2>(e).to_string() << ")";
      break;
    }
  }
  for (const auto& e : b.edges) {
    if (!a.edges.contains(e)) {
      os << "; only in " << b_name << ": (" << std::get<0>(e).to_string() << ", "
         << std::get<1>(e).to_string() << ", " << std::get<2>(e).to_string() << ")";
      break;
    }
  }
  return os.str();
}

bool vertices_contained(const LabeledGraph& small, const LabeledGraph& big) {
  for (const auto& v : small.vertices) {
    if (!big.vertices.contains(v)) return false;
  }
  return true;
}

OracleReport compare(const LabeledGraph& reference, const LabeledGraph& derived,
                     bool exact, bool bounded, const char* ref_name, const char* der_name) {
  OracleReport report;
  report.bounded = bounded;
  if (bounded) {
    report.pass = graphs_equal_on_common_region(reference, derived);
  } else if (exact) {
    report.pass = graphs_equal(reference, derived);
  } else {
    report.pass = vertices_contained(reference, derived) &&
                  graphs_equal_on_common_region(reference, derived) &&
                  reference.initial == derived.initial;
  }
  if (!report.pass) report.detail = summarize_mismatch(reference, derived, ref_name, der_name);
  return report;
}

}  // namespace

OracleReport check_truncation(const Net& net, const Marking& i, Semantics sem,
                              const Budget& budget) {
  auto reach = reachability_graph(net, i, budget);
  LabeledGraph derived;
  BuildStatus build_status;
  if (sem == Semantics::st) {
    auto st = build_st(net, i, budget);
    derived = st_truncate1(st.graph);
    build_status = st.status;
  } else {
    auto built = sem == Semantics::hda ? build_hda(net, i, budget)
                                       : build_phda(net, i, sem, budget);
    derived = built.complex.skeleton1();
    build_status = built.status;
  }
  bool bounded = !reach.status.complete() || !build_status.complete();
  bool exact = sem != Semantics::apriori;
  return compare(reach.graph, derived, exact, bounded, "reachability", "1-truncation");
}

OracleReport check_flatten(const Net& net, const Marking& i, Semantics sem,
                           const Budget& budget) {
  StepMode mode;
  switch (sem) {
    case Semantics::hda: mode = StepMode::cs; break;
    case Semantics::aposteriori: mode = StepMode::aposteriori; break;
    case Semantics::apriori: mode = StepMode::apriori; break;
    default: throw std::invalid_argument("check_flatten: cell semantics only");
  }
  Budget aligned = budget;
  aligned.max_step_size = budget.max_dim;  // steps and cells cover the same sizes
  auto cs = cs_reachability_graph(net, i, mode, aligned);
  auto built = sem == Semantics::hda ? build_hda(net, i, aligned)
                                     : build_phda(net, i, sem, aligned);
  LabeledGraph flat = built.complex.flatten();
  bool bounded = !cs.status.complete() || !built.status.complete();
  return compare(cs.graph, flat, /*exact=*/true, bounded, "concurrent-steps", "flattening");
}

}  // namespace pncube
