#include "gbs/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbs/error.hpp"

namespace gbs {

namespace {

using nlohmann::json;

Integer label_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Integer(std::to_string(value.get<std::uint64_t>()));
    }
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    Integer n;
    if (n.set_str(value.get<std::string>(), 10) == 0) return n;
  }
  throw Error(ErrorCode::MalformedInput, where + " must be an integer");
}

json label_to_json(const Integer& n) {
  if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::MalformedInput, where + " is missing \"" + key + "\"");
  }
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) {
    throw Error(ErrorCode::MalformedInput, where + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

}  // namespace

LabeledGraph::LabeledGraph(std::vector<std::string> vertices, std::vector<LabeledEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertices_[v], v).second) {
      throw Error(ErrorCode::DuplicateId, "vertex \"" + vertices_[v] + "\" appears twice");
    }
  }
  std::set<std::string, std::less<>> edge_ids;
  for (const auto& e : edges_) {
    if (!edge_ids.insert(e.id).second) {
      throw Error(ErrorCode::DuplicateId, "edge \"" + e.id + "\" appears twice");
    }
    if (e.origin >= vertices_.size() || e.terminus >= vertices_.size()) {
      throw Error(ErrorCode::MalformedInput, "edge \"" + e.id + "\" has an endpoint out of range");
    }
    if (e.label_plus == 0 || e.label_minus == 0) {
      throw Error(ErrorCode::ZeroLabel, "edge \"" + e.id + "\" has a zero label");
    }
  }

  std::vector<VertexIndex> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), VertexIndex{0});
  auto find = [&](VertexIndex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t parts = vertices_.size();
  for (const auto& e : edges_) {
    auto a = find(e.origin), b = find(e.terminus);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --parts;
    }
  }
  if (parts != 1) {
    throw Error(ErrorCode::Disconnected,
                "graph has " + std::to_string(parts) + " connected components");
  }
}

LabeledGraph LabeledGraph::from_specs(std::vector<std::string> vertices,
                                      const std::vector<EdgeSpec>& edges) {
  std::map<std::string, VertexIndex, std::less<>> index;
  for (VertexIndex v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], v);
  std::vector<LabeledEdge> built;
  built.reserve(edges.size());
  for (const auto& spec : edges) {
    auto from = index.find(spec.from);
    auto to = index.find(spec.to);
    if (from == index.end() || to == index.end()) {
      throw Error(ErrorCode::MalformedInput,
                  "edge \"" + spec.id + "\" references an unknown vertex");
    }
    built.push_back({spec.id, from->second, to->second, spec.label_from, spec.label_to});
  }
  return LabeledGraph(std::move(vertices), std::move(built));
}

std::optional<VertexIndex> LabeledGraph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> LabeledGraph::find_edge(std::string_view id) const {
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return e;
  }
  return std::nullopt;
}

VertexIndex LabeledGraph::least_vertex() const { return vertex_lookup_.begin()->second; }

std::vector<EdgeIndex> LabeledGraph::incident_edges(VertexIndex v) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    if (edges_[e].origin == v || edges_[e].terminus == v) out.push_back(e);
  }
  return out;
}

LabeledGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "top level must be an object");

  const json& vs = require(doc, "vertices", "graph");
  const json& es = require(doc, "edges", "graph");
  if (!vs.is_array()) throw Error(ErrorCode::MalformedInput, "\"vertices\" must be an array");
  if (!es.is_array()) throw Error(ErrorCode::MalformedInput, "\"edges\" must be an array");

  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw Error(ErrorCode::MalformedInput, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const json& e = es[i];
    std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) throw Error(ErrorCode::MalformedInput, where + " must be an object");
    EdgeSpec spec;
    spec.id = require_string(e, "id", where);
    spec.from = require_string(e, "from", where);
    spec.to = require_string(e, "to", where);
    spec.label_from = label_from_json(require(e, "label_from", where), where + ".label_from");
    spec.label_to = label_from_json(require(e, "label_to", where), where + ".label_to");
    edges.push_back(std::move(spec));
  }
  return LabeledGraph::from_specs(std::move(vertices), edges);
}

std::string serialize_graph(const LabeledGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json edge;
    edge["id"] = e.id;
    edge["from"] = g.vertex_name(e.origin);
    edge["to"] = g.vertex_name(e.terminus);
    edge["label_from"] = label_to_json(e.label_plus);
    edge["label_to"] = label_to_json(e.label_minus);
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump();
}

std::vector<EdgeIndex> SpanningData::non_tree_edges() const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < in_tree.size(); ++e) {
    if (!in_tree[e]) out.push_back(e);
  }
  return out;
}

SpanningData spanning_tree(const LabeledGraph& g) { return spanning_tree(g, g.least_vertex()); }

SpanningData spanning_tree(const LabeledGraph& g, VertexIndex root) {
  const std::size_t n = g.vertex_count();
  SpanningData t;
  t.root = root;
  t.in_tree.assign(g.edge_count(), false);
  t.parent_edge.assign(n, std::nullopt);
  t.scale.assign(n, Rational(0));
  t.signed_scale.assign(n, Rational(0));

  std::vector<std::vector<EdgeIndex>> incident(n);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (edge.is_loop()) continue;
    incident[edge.origin].push_back(e);
    incident[edge.terminus].push_back(e);
  }

  std::vector<bool> seen(n, false);
  std::deque<VertexIndex> queue{root};
  seen[root] = true;
  t.scale[root] = 1;
  t.signed_scale[root] = 1;
  while (!queue.empty()) {
    VertexIndex u = queue.front();
    queue.pop_front();
    t.bfs_order.push_back(u);
    for (EdgeIndex e : incident[u]) {
      const auto& edge = g.edge(e);
      const int eps_u = edge.origin == u ? 1 : -1;
      const VertexIndex w = edge.end(-eps_u);
      if (seen[w]) continue;
      seen[w] = true;
      t.in_tree[e] = true;
      t.tree_edges.push_back(e);
      t.parent_edge[w] = e;
      // lambda(eps_u e) g_u = lambda(-eps_u e) g_w along the tree edge
      const Integer& near = edge.label(eps_u);
      const Integer& far = edge.label(-eps_u);
      t.scale[w] = t.scale[u] * make_rational(abs_value(near), abs_value(far));
      t.signed_scale[w] = t.signed_scale[u] * make_rational(near, far);
      queue.push_back(w);
    }
  }
  return t;
}

VertexIndex path_tail(const LabeledGraph& g, const OrientedEdge& step) {
  const auto& e = g.edge(step.edge);
  return step.direction > 0 ? e.origin : e.terminus;
}

VertexIndex path_head(const LabeledGraph& g, const OrientedEdge& step) {
  const auto& e = g.edge(step.edge);
  return step.direction > 0 ? e.terminus : e.origin;
}

EdgePath tree_path(const LabeledGraph& g, const SpanningData& t, VertexIndex from,
                   VertexIndex to) {
  auto ancestors = [&](VertexIndex v) {
    std::vector<VertexIndex> chain{v};
    while (auto pe = t.parent_edge[v]) {
      const auto& e = g.edge(*pe);
      v = e.origin == v ? e.terminus : e.origin;
      chain.push_back(v);
    }
    return chain;
  };
  auto up_from = ancestors(from);
  auto up_to = ancestors(to);
  // strip the common suffix down to the lowest common ancestor
  while (up_from.size() > 1 && up_to.size() > 1 &&
         up_from[up_from.size() - 2] == up_to[up_to.size() - 2]) {
    up_from.pop_back();
    up_to.pop_back();
  }

  auto step_to_parent = [&](VertexIndex child) {
    EdgeIndex e = *t.parent_edge[child];
    return OrientedEdge{e, g.edge(e).origin == child ? 1 : -1};
  };

  EdgePath path;
  for (std::size_t i = 0; i + 1 < up_from.size(); ++i) path.push_back(step_to_parent(up_from[i]));
  for (std::size_t i = up_to.size() - 1; i-- > 0;) {
    OrientedEdge s = step_to_parent(up_to[i]);
    s.direction = -s.direction;
    path.push_back(s);
  }
  return path;
}

std::vector<EdgePath> cycle_basis(const LabeledGraph& g, const SpanningData& t) {
  std::vector<EdgePath> basis;
  for (EdgeIndex e : t.non_tree_edges()) {
    EdgePath cycle{{e, 1}};
    auto back = tree_path(g, t, g.edge(e).terminus, g.edge(e).origin);
    cycle.insert(cycle.end(), back.begin(), back.end());
    basis.push_back(std::move(cycle));
  }
  return basis;
}

Subgraph whole_graph(const LabeledGraph& g) {
  Subgraph s;
  s.vertices.resize(g.vertex_count());
  std::iota(s.vertices.begin(), s.vertices.end(), VertexIndex{0});
  s.edges.resize(g.edge_count());
  std::iota(s.edges.begin(), s.edges.end(), EdgeIndex{0});
  return s;
}

std::vector<Subgraph> connected_components(const LabeledGraph& g, const Subgraph& sub) {
  std::map<VertexIndex, VertexIndex> parent;
  for (VertexIndex v : sub.vertices) parent[v] = v;
  auto find = [&](VertexIndex v) {
    while (parent.at(v) != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeIndex e : sub.edges) {
    auto a = find(g.edge(e).origin), b = find(g.edge(e).terminus);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::map<VertexIndex, Subgraph> by_root;
  for (VertexIndex v : sub.vertices) by_root[find(v)].vertices.push_back(v);
  std::vector<EdgeIndex> edges = sub.edges;
  std::sort(edges.begin(), edges.end());
  for (EdgeIndex e : edges) by_root[find(g.edge(e).origin)].edges.push_back(e);

  auto by_name = [&](VertexIndex a, VertexIndex b) { return g.vertex_name(a) < g.vertex_name(b); };
  std::vector<Subgraph> out;
  for (auto& [root, comp] : by_root) {
    std::sort(comp.vertices.begin(), comp.vertices.end(), by_name);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [&](const Subgraph& a, const Subgraph& b) {
    return by_name(a.vertices.front(), b.vertices.front());
  });
  return out;
}

std::string emit_dot(const LabeledGraph& g, const DotAnnotations& annotations) {
  std::ostringstream out;
  out << "digraph " << dot_quote(annotations.title.empty() ? "gbs" : annotations.title) << " {\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::string label = dot_escape(g.vertex_name(v));
    if (auto it = annotations.zeta.find(v); it != annotations.zeta.end()) {
      label += it->second > 0 ? "\\nζ=+1" : "\\nζ=-1";
    }
    if (auto it = annotations.mu.find(v); it != annotations.mu.end()) {
      label += "\\nμ=" + it->second.get_str();
    }
    out << "  " << dot_quote(g.vertex_name(v)) << " [label=\"" << label << "\"];\n";
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    out << "  " << dot_quote(g.vertex_name(edge.origin)) << " -> "
        << dot_quote(g.vertex_name(edge.terminus)) << " [label=\"" << edge.label_plus.get_str()
        << "," << edge.label_minus.get_str() << "\"";
    if (std::find(annotations.highlighted_edges.begin(), annotations.highlighted_edges.end(), e) !=
        annotations.highlighted_edges.end()) {
      out << ", penwidth=2";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gbs
