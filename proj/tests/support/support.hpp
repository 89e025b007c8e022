#pragma once

// Test-only helpers and oracles. The oracles recompute quantities from the
// raw labels without going through the library's algorithms.

#include <nlohmann/json.hpp>

#include <string>
#include <tuple>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs::testing {

using EdgeRow = std::tuple<std::string, std::string, std::string, long, long>;

LabeledGraph make_graph(std::vector<std::string> vertices, const std::vector<EdgeRow>& edges);

// Single vertex "v" with one loop "e" carrying (m, n): the group BS(m, n).
LabeledGraph loop(long m, long n);

// Frozen values from tests/oracles/derived_values.json.
const nlohmann::json& derived();

Rational rat(const std::string& text);

// Invariant factors of the abelianized presentation, 0 for each free factor,
// via an integer Smith normal form.
std::vector<Integer> abelian_invariants(const LabeledGraph& g);

// Every simple cycle inside `sub`, as edge sets, by exhaustive subset search.
std::vector<std::vector<EdgeIndex>> simple_cycles(const LabeledGraph& g, const Subgraph& sub);

// The cycle as a closed walk.
EdgePath cycle_walk(const LabeledGraph& g, const std::vector<EdgeIndex>& cycle);

// Modular value of each non-tree edge as the product of label ratios along
// its fundamental cycle.
std::vector<Rational> cycle_product_moduli(const LabeledGraph& g, const SpanningData& t);

}  // namespace gbs::testing
