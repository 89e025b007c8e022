#pragma once

// Group-preserving rewrites of labeled graphs: elementary collapses down to a
// reduced graph, admissible sign changes, and the tree-positive form.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct ReductionStep {
  std::string edge;             // collapsed edge
  std::string absorbed_vertex;  // the unit-label end, deleted by the collapse
  Integer multiplier;           // applied to every other label at the absorbed vertex
};

struct Reduction {
  LabeledGraph graph;
  std::vector<ReductionStep> trace;
};

// Contract a non-loop edge whose label at end `eps` is a unit. The vertex at
// that end disappears; its other edge ends move to the opposite endpoint with
// labels multiplied by label(eps) * label(-eps). A parallel edge becomes a loop.
LabeledGraph elementary_collapse(const LabeledGraph& g, EdgeIndex e, int eps);
LabeledGraph elementary_collapse(const LabeledGraph& g, std::string_view edge_id, int eps);

bool is_reduced(const LabeledGraph& g);

// A collapse that is currently possible.
struct CollapseCandidate {
  EdgeIndex edge;
  int eps;
};

std::vector<CollapseCandidate> collapse_candidates(const LabeledGraph& g);

// Picks one index into a non-empty candidate list.
using CollapseChooser = std::function<std::size_t(const std::vector<CollapseCandidate>&)>;

// Deterministic: first eligible edge in current order, +1 end preferred.
Reduction reduce(const LabeledGraph& g);
Reduction reduce(const LabeledGraph& g, const CollapseChooser& choose);

// Re-applies a trace to the graph it was produced from.
LabeledGraph replay(const LabeledGraph& g, const std::vector<ReductionStep>& trace);

struct SignTarget {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  std::string id;
};

LabeledGraph sign_change(const LabeledGraph& g, const SignTarget& target);
LabeledGraph flip_vertex(const LabeledGraph& g, VertexIndex v);
LabeledGraph flip_edge(const LabeledGraph& g, EdgeIndex e);

bool is_t_positive(const LabeledGraph& g, const SpanningData& t);

// Root-to-leaf pass over `t`: flip the edge when the parent-side label is
// negative, then flip the child vertex when the child-side label still is.
LabeledGraph make_t_positive(const LabeledGraph& g, const SpanningData& t);

}  // namespace gbs
