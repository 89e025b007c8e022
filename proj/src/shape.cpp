#include "gbs/shape.hpp"

#include "gbs/error.hpp"

namespace gbs {

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Cyclic: return "Cyclic";
    case ShapeKind::ZxZ: return "ZxZ";
    case ShapeKind::Klein: return "Klein";
    case ShapeKind::BS1n: return "BS1n";
    case ShapeKind::NonSolvable: return "NonSolvable";
  }
  return "?";
}

GroupShape shape_of_reduced(Reduction reduction) {
  const LabeledGraph& g = reduction.graph;
  if (!is_reduced(g)) throw Error(ErrorCode::PreconditionViolated, "graph is not reduced");
  ShapeKind kind = ShapeKind::NonSolvable;
  Integer n;
  if (g.vertex_count() == 1 && g.edge_count() == 0) {
    kind = ShapeKind::Cyclic;
  } else if (g.vertex_count() == 1 && g.edge_count() == 1) {
    const auto& loop = g.edge(0);
    const bool unit_plus = is_unit(loop.label_plus), unit_minus = is_unit(loop.label_minus);
    if (unit_plus && unit_minus) {
      kind = loop.label_plus == loop.label_minus ? ShapeKind::ZxZ : ShapeKind::Klein;
    } else if (unit_plus || unit_minus) {
      // inverting the vertex generator makes the unit label +1
      kind = ShapeKind::BS1n;
      n = unit_plus ? Integer(loop.label_minus * loop.label_plus)
                          : Integer(loop.label_plus * loop.label_minus);
    }
  } else if (g.vertex_count() == 2 && g.edge_count() == 1) {
    const auto& e = g.edge(0);
    if (abs_value(e.label_plus) == 2 && abs_value(e.label_minus) == 2) kind = ShapeKind::Klein;
  }
  return GroupShape{kind, n, std::move(reduction)};
}

GroupShape detect_shape(const LabeledGraph& g) { return shape_of_reduced(reduce(g)); }

}  // namespace gbs
