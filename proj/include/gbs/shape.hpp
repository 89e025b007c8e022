#pragma once

#include <string_view>

#include "gbs/graph.hpp"
#include "gbs/normalize.hpp"

namespace gbs {

enum class ShapeKind { Cyclic, ZxZ, Klein, BS1n, NonSolvable };

std::string_view to_string(ShapeKind kind);

// Isomorphism type of the solvable groups, or NonSolvable. `reduced` is the
// reduced graph the shape was read from, kept for every kind.
struct GroupShape {
  ShapeKind kind = ShapeKind::NonSolvable;
  Integer n;  // BS1n only: the group is BS(1, n), |n| >= 2
  Reduction reduction;

  const LabeledGraph& reduced() const { return reduction.graph; }
  bool elementary() const {
    return kind == ShapeKind::Cyclic || kind == ShapeKind::ZxZ || kind == ShapeKind::Klein;
  }
  bool solvable() const { return kind != ShapeKind::NonSolvable; }
};

// Reads the shape off a graph that is already reduced.
GroupShape shape_of_reduced(Reduction reduction);

GroupShape detect_shape(const LabeledGraph& g);

}  // namespace gbs
