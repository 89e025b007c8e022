#pragma once

// Edge signs, the subgraph of edges whose edge groups strictly contain the
// radical, and the vertex-labeling procedure deciding whether every closed
// path inside that subgraph has positive sign.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/radical.hpp"

namespace gbs {

// sign(label_plus * label_minus)
int xi(const LabeledEdge& e);

// Product of edge signs along a walk; 1 for the empty walk. Throws NotAPath
// when consecutive steps do not meet.
int xi_path(const LabeledGraph& g, const EdgePath& path);

// Edges with k_e > 1, over the full vertex set.
Subgraph gamma_prime(const LabeledGraph& g, const RadicalData& rad);

enum class FailureCause { NegativeLoop, Conflict };

std::string_view to_string(FailureCause cause);

struct LabelingFailure {
  VertexIndex vertex = 0;
  FailureCause cause = FailureCause::NegativeLoop;
  EdgeIndex first = 0;                // the loop, or the first edge of E_v
  std::optional<EdgeIndex> second;    // Conflict: the edge disagreeing with `first`
};

struct ZetaLabeling {
  std::vector<std::optional<int>> zeta;  // by graph vertex; unset outside the component
  bool complete = false;
  std::optional<LabelingFailure> failure;
  std::vector<VertexIndex> order;        // vertices in the order they were labeled
};

// Picks the next vertex among the candidates, which arrive in discovery
// order (the first call gets the whole component sorted by name).
using VertexSelector = std::function<std::size_t(const std::vector<VertexIndex>&)>;

// Edge sign used by the labeling; xi unless a test substitutes a faulty one.
using EdgeSign = int (*)(const LabeledEdge&);

ZetaLabeling run_labeling(const LabeledGraph& g, const Subgraph& component);
ZetaLabeling run_labeling(const LabeledGraph& g, const Subgraph& component,
                          const VertexSelector& select, EdgeSign sign = xi);

struct ComponentLabeling {
  Subgraph component;
  ZetaLabeling labeling;
};

struct ConditionResult {
  bool holds = false;
  Integer prime;
  Subgraph gamma_prime;
  std::vector<ComponentLabeling> components;

  // ζ over all vertices, merged across components.
  std::vector<std::optional<int>> combined_zeta(std::size_t vertex_count) const;
  const ComponentLabeling* first_failure() const;
};

// Throws PreconditionViolated unless g is reduced, its modular image is
// exactly {1,-1} and all labels are powers of one odd prime.
ConditionResult check_condition(const LabeledGraph& g, const RadicalData& rad);

// Same procedure with no precondition check.
ConditionResult label_components(const LabeledGraph& g, const Subgraph& sub,
                                 const VertexSelector* select = nullptr, EdgeSign sign = xi);

// Independent route: every fundamental cycle of every component of `sub`
// has positive sign.
bool oracle_cycle_check(const LabeledGraph& g, const Subgraph& sub);

}  // namespace gbs
