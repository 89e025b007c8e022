#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace gbs::testing {

LabeledGraph make_graph(std::vector<std::string> vertices, const std::vector<EdgeRow>& edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& [id, from, to, plus, minus] : edges) {
    specs.push_back({id, from, to, Integer(plus), Integer(minus)});
  }
  return LabeledGraph::from_specs(std::move(vertices), specs);
}

LabeledGraph loop(long m, long n) { return make_graph({"v"}, {{"e", "v", "v", m, n}}); }

const nlohmann::json& derived() {
  static const nlohmann::json values = [] {
    std::ifstream in(GBS_DERIVED_VALUES);
    return nlohmann::json::parse(in);
  }();
  return values;
}

Rational rat(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

std::vector<Integer> abelian_invariants(const LabeledGraph& g) {
  const std::size_t letters = g.edge_count() + 1 - g.vertex_count();
  const std::size_t cols = g.vertex_count() + letters;
  std::vector<std::vector<Integer>> a;
  for (const auto& e : g.edges()) {
    std::vector<Integer> row(cols, 0);
    row[e.origin] += e.label_plus;
    row[e.terminus] -= e.label_minus;
    a.push_back(row);
  }
  const std::size_t rows = a.size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest non-zero entry of the trailing block goes to (t, t)
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  std::vector<Integer> out;
  for (const auto& d : diag) {
    if (d != 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t k = diag.size(); k < cols; ++k) out.push_back(0);
  return out;
}

std::vector<std::vector<EdgeIndex>> simple_cycles(const LabeledGraph& g, const Subgraph& sub) {
  std::vector<std::vector<EdgeIndex>> out;
  const std::size_t m = sub.edges.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<EdgeIndex> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) chosen.push_back(sub.edges[i]);
    }
    if (chosen.size() == 1 && g.edge(chosen[0]).is_loop()) {
      out.push_back(chosen);
      continue;
    }
    std::map<VertexIndex, int> degree;
    bool has_loop = false;
    for (EdgeIndex e : chosen) {
      has_loop = has_loop || g.edge(e).is_loop();
      ++degree[g.edge(e).origin];
      ++degree[g.edge(e).terminus];
    }
    if (has_loop) continue;
    if (!std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; })) continue;
    // connected: walk from one vertex along chosen edges
    std::set<VertexIndex> reached{degree.begin()->first};
    for (bool grew = true; grew;) {
      grew = false;
      for (EdgeIndex e : chosen) {
        const auto& edge = g.edge(e);
        if (reached.count(edge.origin) != reached.count(edge.terminus)) {
          reached.insert(edge.origin);
          reached.insert(edge.terminus);
          grew = true;
        }
      }
    }
    if (reached.size() == degree.size()) out.push_back(chosen);
  }
  return out;
}

EdgePath cycle_walk(const LabeledGraph& g, const std::vector<EdgeIndex>& cycle) {
  EdgePath walk;
  std::vector<bool> used(cycle.size(), false);
  VertexIndex at = g.edge(cycle[0]).origin;
  for (std::size_t step = 0; step < cycle.size(); ++step) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (used[i]) continue;
      const auto& e = g.edge(cycle[i]);
      if (e.origin == at) {
        walk.push_back({cycle[i], 1});
        at = e.terminus;
      } else if (e.terminus == at) {
        walk.push_back({cycle[i], -1});
        at = e.origin;
      } else {
        continue;
      }
      used[i] = true;
      break;
    }
  }
  return walk;
}

std::vector<Rational> cycle_product_moduli(const LabeledGraph& g, const SpanningData& t) {
  std::vector<Rational> out;
  for (const auto& cycle : cycle_basis(g, t)) {
    Rational q = 1;
    for (const auto& step : cycle) {
      const auto& e = g.edge(step.edge);
      Rational ratio = make_rational(e.label_minus, e.label_plus);
      q *= step.direction > 0 ? ratio : Rational(1 / ratio);
    }
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace gbs::testing
