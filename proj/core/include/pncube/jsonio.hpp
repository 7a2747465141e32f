#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pncube/complex.hpp"
#include "pncube/diagnostics.hpp"
#include "pncube/graph.hpp"
#include "pncube/stgraph.hpp"

namespace pncube {

/// {"alphabet": [...], "cells": [{"id", "marking", "conclist", "faces":
/// [{"A", "B", "target"}]}], "initial": [...], "partial": bool}
/// Cells are emitted in id order, faces ordered by (A, B); markings are
/// objects with places in canonical order. Byte-deterministic.
std::string complex_to_json(const Complex& x);

struct ComplexLoadResult {
  std::optional<Complex> complex;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return complex.has_value(); }
};

/// Inverse of complex_to_json. Structurally broken complexes (duplicate
/// keys, dangling targets, bad conclists) still load where possible so that
/// validate() can report them; only malformed JSON is a load error.
ComplexLoadResult complex_from_json(std::string_view bytes);

/// {"states": [{"id", "marking", "conclist", "memory": [{"consume",
/// "produce"}]}], "edges": [{"src", "kind", "position", "dst"}],
/// "initial": [...]}
std::string st_to_json(const STGraph& g);

/// Directed graph of markings; multiset edge labels; initial vertex drawn
/// with a double border.
std::string graph_to_dot(const LabeledGraph& g, const std::string& name);

/// ST-graph rendering: one node per state, start/terminate edge labels in
/// t+ / t- form.
std::string st_to_dot(const STGraph& g, const std::string& name);

/// CSV "dimension,num_cells,num_unique_conclists,num_unique_markings",
/// one row per occupied dimension, ascending, LF line endings.
std::string stats_csv(const Complex& x);
std::string stats_csv(const STGraph& g);

}  // namespace pncube
