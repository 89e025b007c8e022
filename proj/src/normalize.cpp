#include "gbs/normalize.hpp"

#include "gbs/error.hpp"

namespace gbs {

LabeledGraph elementary_collapse(const LabeledGraph& g, EdgeIndex e, int eps) {
  if (e >= g.edge_count()) throw Error(ErrorCode::UnknownTarget, "edge index out of range");
  const LabeledEdge& c = g.edge(e);
  if (c.is_loop()) throw Error(ErrorCode::IsLoop, "cannot collapse loop " + c.id);
  if (!is_unit(c.label(eps))) {
    throw Error(ErrorCode::LabelNotUnit,
                "label " + c.label(eps).get_str() + " of " + c.id + " is not +-1");
  }
  const VertexIndex gone = c.end(eps);
  const VertexIndex kept = c.end(-eps);
  const Integer factor = c.label(eps) * c.label(-eps);

  std::vector<std::string> names;
  std::vector<VertexIndex> renumber(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (v == gone) continue;
    renumber[v] = names.size();
    names.push_back(g.vertex_name(v));
  }
  renumber[gone] = renumber[kept];

  std::vector<LabeledEdge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    LabeledEdge copy = g.edge(f);
    if (copy.origin == gone) copy.label_plus *= factor;
    if (copy.terminus == gone) copy.label_minus *= factor;
    copy.origin = renumber[copy.origin];
    copy.terminus = renumber[copy.terminus];
    edges.push_back(std::move(copy));
  }
  return LabeledGraph(std::move(names), std::move(edges));
}

LabeledGraph elementary_collapse(const LabeledGraph& g, std::string_view edge_id, int eps) {
  auto e = g.find_edge(edge_id);
  if (!e) throw Error(ErrorCode::UnknownTarget, "no edge " + std::string(edge_id));
  return elementary_collapse(g, *e, eps);
}

std::vector<CollapseCandidate> collapse_candidates(const LabeledGraph& g) {
  std::vector<CollapseCandidate> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (edge.is_loop()) continue;
    for (int eps : {1, -1}) {
      if (is_unit(edge.label(eps))) out.push_back({e, eps});
    }
  }
  return out;
}

bool is_reduced(const LabeledGraph& g) { return collapse_candidates(g).empty(); }

Reduction reduce(const LabeledGraph& g) {
  return reduce(g, [](const std::vector<CollapseCandidate>&) { return std::size_t{0}; });
}

Reduction reduce(const LabeledGraph& g, const CollapseChooser& choose) {
  Reduction out{g, {}};
  for (;;) {
    auto candidates = collapse_candidates(out.graph);
    if (candidates.empty()) break;
    const auto pick = candidates.at(choose(candidates));
    const auto& edge = out.graph.edge(pick.edge);
    out.trace.push_back({edge.id, out.graph.vertex_name(edge.end(pick.eps)),
                         edge.label(pick.eps) * edge.label(-pick.eps)});
    out.graph = elementary_collapse(out.graph, pick.edge, pick.eps);
  }
  return out;
}

LabeledGraph replay(const LabeledGraph& g, const std::vector<ReductionStep>& trace) {
  LabeledGraph cur = g;
  for (const auto& step : trace) {
    auto e = cur.find_edge(step.edge);
    auto v = cur.find_vertex(step.absorbed_vertex);
    if (!e || !v) throw Error(ErrorCode::UnknownTarget, "trace step on " + step.edge);
    const auto& edge = cur.edge(*e);
    if (edge.origin != *v && edge.terminus != *v) {
      throw Error(ErrorCode::UnknownTarget,
                  step.absorbed_vertex + " is not an end of " + step.edge);
    }
    cur = elementary_collapse(cur, *e, edge.origin == *v ? 1 : -1);
  }
  return cur;
}

LabeledGraph flip_vertex(const LabeledGraph& g, VertexIndex v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownTarget, "vertex index out of range");
  auto edges = g.edges();
  for (auto& e : edges) {
    if (e.origin == v) e.label_plus = -e.label_plus;
    if (e.terminus == v) e.label_minus = -e.label_minus;
  }
  return LabeledGraph(g.vertices(), std::move(edges));
}

LabeledGraph flip_edge(const LabeledGraph& g, EdgeIndex e) {
  if (e >= g.edge_count()) throw Error(ErrorCode::UnknownTarget, "edge index out of range");
  auto edges = g.edges();
  edges[e].label_plus = -edges[e].label_plus;
  edges[e].label_minus = -edges[e].label_minus;
  return LabeledGraph(g.vertices(), std::move(edges));
}

LabeledGraph sign_change(const LabeledGraph& g, const SignTarget& target) {
  if (target.kind == SignTarget::Kind::Vertex) {
    auto v = g.find_vertex(target.id);
    if (!v) throw Error(ErrorCode::UnknownTarget, "no vertex " + target.id);
    return flip_vertex(g, *v);
  }
  auto e = g.find_edge(target.id);
  if (!e) throw Error(ErrorCode::UnknownTarget, "no edge " + target.id);
  return flip_edge(g, *e);
}

bool is_t_positive(const LabeledGraph& g, const SpanningData& t) {
  for (EdgeIndex e : t.tree_edges) {
    if (g.edge(e).label_plus < 0 || g.edge(e).label_minus < 0) return false;
  }
  return true;
}

LabeledGraph make_t_positive(const LabeledGraph& g, const SpanningData& t) {
  if (t.in_tree.size() != g.edge_count() || t.parent_edge.size() != g.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, "spanning data does not belong to this graph");
  }
  std::vector<LabeledEdge> edges = g.edges();
  // tree_edges is in discovery order, so a parent is settled before its children
  for (EdgeIndex e : t.tree_edges) {
    const VertexIndex child =
        t.parent_edge[edges[e].terminus] == e ? edges[e].terminus : edges[e].origin;
    const int child_end = edges[e].terminus == child ? -1 : 1;
    if (edges[e].label(-child_end) < 0) {
      edges[e].label_plus = -edges[e].label_plus;
      edges[e].label_minus = -edges[e].label_minus;
    }
    if (edges[e].label(child_end) < 0) {
      for (auto& f : edges) {
        if (f.origin == child) f.label_plus = -f.label_plus;
        if (f.terminus == child) f.label_minus = -f.label_minus;
      }
    }
  }
  return LabeledGraph(g.vertices(), std::move(edges));
}

}  // namespace gbs
