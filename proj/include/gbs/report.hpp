#pragma once

// JSON renderings of the analysis results, shared by the CLI and tests.

#include <nlohmann/json.hpp>

#include "gbs/classify.hpp"
#include "gbs/normalize.hpp"

namespace gbs {

using Json = nlohmann::ordered_json;

// Integers fitting in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& n);
Json rational_json(const Rational& q);

Json graph_json(const LabeledGraph& g);
Json trace_json(const std::vector<ReductionStep>& trace);
Json shape_json(const GroupShape& shape);
Json modular_json(const ModularImage& image);
Json radical_json(const LabeledGraph& g, const RadicalData& rad);
Json condition_json(const LabeledGraph& g, const ConditionResult& cond);
Json witness_json(const LabeledGraph& reduced, const Witness& w);
Json verdict_json(const LabeledGraph& reduced, const Verdict& v);

// Always: shape, modular_image, verdicts. With `detailed`: reduced graph,
// reduction trace, radical and elliptic-condition data.
Json report_json(const Report& report, bool detailed);

}  // namespace gbs
