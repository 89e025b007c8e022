#pragma once

// Labeled graphs defining generalized Baumslag-Solitar groups, together with
// the plain graph algorithms the rest of the library is built on.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/numeric.hpp"

namespace gbs {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

// One edge of the underlying multigraph. The end at `origin` is the +1 end
// and carries label_plus; the end at `terminus` is the -1 end. Loops have
// origin == terminus but still two distinct labels.
struct LabeledEdge {
  std::string id;
  VertexIndex origin = 0;
  VertexIndex terminus = 0;
  Integer label_plus;
  Integer label_minus;

  bool is_loop() const { return origin == terminus; }
  VertexIndex end(int eps) const { return eps > 0 ? origin : terminus; }
  const Integer& label(int eps) const { return eps > 0 ? label_plus : label_minus; }
  Integer& label(int eps) { return eps > 0 ? label_plus : label_minus; }

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Edge description by vertex name, used when building graphs from input.
struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
  Integer label_from;
  Integer label_to;
};

// A validated, immutable labeled graph: non-empty, connected, all labels
// non-zero, vertex and edge identifiers unique. Vertex and edge order are
// those given at construction.
class LabeledGraph {
 public:
  LabeledGraph(std::vector<std::string> vertices, std::vector<LabeledEdge> edges);

  static LabeledGraph from_specs(std::vector<std::string> vertices,
                                 const std::vector<EdgeSpec>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const LabeledEdge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  // Lexicographically least vertex name; ties cannot occur.
  VertexIndex least_vertex() const;

  // Edges with at least one end at v, in edge order.
  std::vector<EdgeIndex> incident_edges(VertexIndex v) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<LabeledEdge> edges_;
  std::map<std::string, VertexIndex, std::less<>> vertex_lookup_;
};

// Reading and writing the JSON graph format:
//   {"vertices": [..], "edges": [{"id", "from", "to", "label_from", "label_to"}]}
// Labels outside the 64-bit range are accepted and emitted as decimal strings.
LabeledGraph parse_graph(std::string_view text);
std::string serialize_graph(const LabeledGraph& g);

// Maximal subtree chosen breadth-first from the root, scanning edges in input
// order, with the per-vertex potentials obtained by propagating from the root.
struct SpanningData {
  VertexIndex root = 0;
  std::vector<EdgeIndex> tree_edges;         // in discovery order
  std::vector<bool> in_tree;                 // indexed by edge
  std::vector<VertexIndex> bfs_order;        // root first
  std::vector<std::optional<EdgeIndex>> parent_edge;  // indexed by vertex
  std::vector<Rational> scale;               // s(v) > 0
  std::vector<Rational> signed_scale;        // r(v) != 0

  bool is_tree_edge(EdgeIndex e) const { return in_tree.at(e); }
  std::vector<EdgeIndex> non_tree_edges() const;
};

SpanningData spanning_tree(const LabeledGraph& g);
SpanningData spanning_tree(const LabeledGraph& g, VertexIndex root);

// An edge traversed forward (origin to terminus, direction +1) or backward.
struct OrientedEdge {
  EdgeIndex edge = 0;
  int direction = 1;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

using EdgePath = std::vector<OrientedEdge>;

VertexIndex path_tail(const LabeledGraph& g, const OrientedEdge& step);
VertexIndex path_head(const LabeledGraph& g, const OrientedEdge& step);

// Tree path between two vertices, as oriented steps from `from` to `to`.
EdgePath tree_path(const LabeledGraph& g, const SpanningData& t, VertexIndex from,
                   VertexIndex to);

// One fundamental cycle per non-tree edge: the edge traversed forward
// followed by the tree path from its terminus back to its origin.
std::vector<EdgePath> cycle_basis(const LabeledGraph& g, const SpanningData& t);

// A vertex subset with an edge subset whose ends lie inside it.
struct Subgraph {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;
};

Subgraph whole_graph(const LabeledGraph& g);

// Components ordered by their least vertex name; vertices inside a component
// sorted by name; edges kept in graph order.
std::vector<Subgraph> connected_components(const LabeledGraph& g, const Subgraph& sub);

// Optional per-vertex decorations for DOT output.
struct DotAnnotations {
  std::map<VertexIndex, int> zeta;
  std::map<VertexIndex, Integer> mu;
  std::vector<EdgeIndex> highlighted_edges;
  std::string title;
};

std::string emit_dot(const LabeledGraph& g, const DotAnnotations& annotations = {});

}  // namespace gbs
