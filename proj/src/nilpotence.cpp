#include "gbs/nilpotence.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "gbs/arithmetic.hpp"
#include "gbs/error.hpp"
#include "gbs/modular.hpp"
#include "gbs/normalize.hpp"

namespace gbs {

int xi(const LabeledEdge& e) { return sign_of(e.label_plus) * sign_of(e.label_minus); }

int xi_path(const LabeledGraph& g, const EdgePath& path) {
  int sign = 1;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].edge >= g.edge_count()) throw Error(ErrorCode::NotAPath, "edge index out of range");
    if (i > 0 && path_head(g, path[i - 1]) != path_tail(g, path[i])) {
      throw Error(ErrorCode::NotAPath, "step " + std::to_string(i) + " does not continue the walk");
    }
    sign *= xi(g.edge(path[i].edge));
  }
  return sign;
}

Subgraph gamma_prime(const LabeledGraph& g, const RadicalData& rad) {
  Subgraph sub = whole_graph(g);
  sub.edges.clear();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (rad.k_e.at(e) != 1) sub.edges.push_back(e);
  }
  return sub;
}

std::string_view to_string(FailureCause cause) {
  return cause == FailureCause::NegativeLoop ? "NegativeLoop" : "Conflict";
}

namespace {

std::size_t first_candidate(const std::vector<VertexIndex>&) { return 0; }

}  // namespace

ZetaLabeling run_labeling(const LabeledGraph& g, const Subgraph& component) {
  return run_labeling(g, component, first_candidate);
}

ZetaLabeling run_labeling(const LabeledGraph& g, const Subgraph& component,
                          const VertexSelector& select, EdgeSign sign) {
  ZetaLabeling out;
  out.zeta.assign(g.vertex_count(), std::nullopt);
  if (component.vertices.empty()) {
    out.complete = true;
    return out;
  }
  std::map<VertexIndex, std::vector<EdgeIndex>> incident;
  for (EdgeIndex e : component.edges) {
    incident[g.edge(e).origin].push_back(e);
    if (!g.edge(e).is_loop()) incident[g.edge(e).terminus].push_back(e);
  }
  for (auto& [v, es] : incident) std::sort(es.begin(), es.end());

  std::vector<VertexIndex> candidates = component.vertices;
  std::vector<bool> queued(g.vertex_count(), false);
  while (out.order.size() < component.vertices.size()) {
    if (candidates.empty()) break;  // component was not connected
    const std::size_t pick = select(candidates);
    const VertexIndex v = candidates.at(pick);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));

    std::optional<EdgeIndex> first;
    int forced = 1;
    for (EdgeIndex e : incident[v]) {
      const auto& edge = g.edge(e);
      if (edge.is_loop()) {
        if (sign(edge) < 0) {
          out.failure = LabelingFailure{v, FailureCause::NegativeLoop, e, std::nullopt};
          return out;
        }
        continue;
      }
      const VertexIndex other = edge.origin == v ? edge.terminus : edge.origin;
      if (!out.zeta[other]) continue;
      const int value = sign(edge) * *out.zeta[other];
      if (!first) {
        first = e;
        forced = value;
      } else if (value != forced) {
        out.failure = LabelingFailure{v, FailureCause::Conflict, *first, e};
        return out;
      }
    }
    out.zeta[v] = forced;
    out.order.push_back(v);

    if (out.order.size() == 1) {
      candidates.clear();
      std::fill(queued.begin(), queued.end(), false);
    }
    queued[v] = true;
    for (EdgeIndex e : incident[v]) {
      const auto& edge = g.edge(e);
      const VertexIndex other = edge.origin == v ? edge.terminus : edge.origin;
      if (!queued[other]) {
        queued[other] = true;
        candidates.push_back(other);
      }
    }
  }
  out.complete = out.order.size() == component.vertices.size();
  return out;
}

std::vector<std::optional<int>> ConditionResult::combined_zeta(std::size_t vertex_count) const {
  std::vector<std::optional<int>> zeta(vertex_count);
  for (const auto& c : components) {
    for (VertexIndex v : c.component.vertices) zeta.at(v) = c.labeling.zeta.at(v);
  }
  return zeta;
}

const ComponentLabeling* ConditionResult::first_failure() const {
  for (const auto& c : components) {
    if (!c.labeling.complete) return &c;
  }
  return nullptr;
}

ConditionResult label_components(const LabeledGraph& g, const Subgraph& sub,
                                 const VertexSelector* select, EdgeSign sign) {
  ConditionResult out;
  out.gamma_prime = sub;
  out.holds = true;
  for (auto& comp : connected_components(g, sub)) {
    ZetaLabeling z = select ? run_labeling(g, comp, *select, sign)
                            : run_labeling(g, comp, first_candidate, sign);
    out.holds = out.holds && z.complete;
    out.components.push_back({std::move(comp), std::move(z)});
  }
  return out;
}

ConditionResult check_condition(const LabeledGraph& g, const RadicalData& rad) {
  if (!is_reduced(g)) throw Error(ErrorCode::PreconditionViolated, "graph is not reduced");
  const auto image = classify_modular_image(letter_moduli(g, spanning_tree(g)));
  if (image.kind != ImageClass::PlusMinusOne) {
    throw Error(ErrorCode::PreconditionViolated,
                "modular image is " + std::string(to_string(image.kind)) + ", not PlusMinusOne");
  }
  std::vector<Integer> primes;
  for (const auto& e : g.edges()) {
    for (int eps : {1, -1}) {
      auto ps = prime_divisors(e.label(eps));
      primes.insert(primes.end(), ps.begin(), ps.end());
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.size() != 1 || primes.front() == 2) {
    throw Error(ErrorCode::PreconditionViolated, "labels are not powers of a single odd prime");
  }
  ConditionResult out = label_components(g, gamma_prime(g, rad));
  out.prime = primes.front();
  return out;
}

bool oracle_cycle_check(const LabeledGraph& g, const Subgraph& sub) {
  // BFS forest inside `sub`; each non-forest edge closes one fundamental cycle
  std::map<VertexIndex, std::vector<EdgeIndex>> incident;
  for (EdgeIndex e : sub.edges) {
    incident[g.edge(e).origin].push_back(e);
    if (!g.edge(e).is_loop()) incident[g.edge(e).terminus].push_back(e);
  }
  std::map<VertexIndex, std::optional<EdgeIndex>> parent;
  std::map<VertexIndex, std::size_t> depth;
  std::vector<bool> in_forest(g.edge_count(), false);
  for (VertexIndex root : sub.vertices) {
    if (parent.count(root)) continue;
    parent[root] = std::nullopt;
    depth[root] = 0;
    std::deque<VertexIndex> queue{root};
    while (!queue.empty()) {
      VertexIndex u = queue.front();
      queue.pop_front();
      for (EdgeIndex e : incident[u]) {
        const auto& edge = g.edge(e);
        if (edge.is_loop()) continue;
        VertexIndex w = edge.origin == u ? edge.terminus : edge.origin;
        if (parent.count(w)) continue;
        parent[w] = e;
        depth[w] = depth[u] + 1;
        in_forest[e] = true;
        queue.push_back(w);
      }
    }
  }
  auto up = [&](VertexIndex v) {
    const auto& edge = g.edge(*parent[v]);
    return edge.origin == v ? edge.terminus : edge.origin;
  };
  for (EdgeIndex e : sub.edges) {
    if (in_forest[e]) continue;
    std::vector<EdgeIndex> cycle{e};
    VertexIndex a = g.edge(e).origin, b = g.edge(e).terminus;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        cycle.push_back(*parent[a]);
        a = up(a);
      } else {
        cycle.push_back(*parent[b]);
        b = up(b);
      }
    }
    bool negative = false;
    for (EdgeIndex c : cycle) {
      const auto& edge = g.edge(c);
      negative ^= (edge.label_plus < 0) != (edge.label_minus < 0);
    }
    if (negative) return false;
  }
  return true;
}

}  // namespace gbs
