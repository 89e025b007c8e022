#include "gbs/report.hpp"

namespace gbs {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return n.get_str();
}

Json rational_json(const Rational& q) { return to_string(q); }

Json graph_json(const LabeledGraph& g) { return Json::parse(serialize_graph(g)); }

Json trace_json(const std::vector<ReductionStep>& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    out.push_back({{"edge", s.edge},
                   {"absorbed_vertex", s.absorbed_vertex},
                   {"multiplier", integer_json(s.multiplier)}});
  }
  return out;
}

Json shape_json(const GroupShape& shape) {
  Json out{{"kind", std::string(to_string(shape.kind))}};
  if (shape.kind == ShapeKind::BS1n) out["n"] = integer_json(shape.n);
  out["elementary"] = shape.elementary();
  out["solvable"] = shape.solvable();
  return out;
}

Json modular_json(const ModularImage& image) {
  Json gens = Json::array();
  std::vector<Rational> values;
  for (const auto& g : image.generators) {
    gens.push_back({{"edge", g.edge_id}, {"value", rational_json(g.value)}});
    values.push_back(g.value);
  }
  Json out{{"defined", true}, {"class", std::string(to_string(image.kind))}};
  out["witness"] = image.witness ? rational_json(*image.witness) : Json(nullptr);
  if (image.witness_edge) out["witness_edge"] = *image.witness_edge;
  out["generators"] = std::move(gens);
  Json primes = Json::array();
  for (const auto& p : modular_subring(values).inverted_primes) primes.push_back(integer_json(p));
  out["subring"] = {{"inverted_primes", std::move(primes)}};
  return out;
}

Json radical_json(const LabeledGraph& g, const RadicalData& rad) {
  Json mu_v = Json::object(), k_e = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) mu_v[g.vertex_name(v)] = integer_json(rad.mu_v[v]);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) k_e[g.edge(e).id] = integer_json(rad.k_e[e]);
  return {{"applicable", true},
          {"M", rational_json(rad.M)},
          {"mu_v", std::move(mu_v)},
          {"mu", integer_json(rad.mu)},
          {"k_e", std::move(k_e)},
          {"cyclic_radical", rad.cyclic_radical}};
}

namespace {

Json failure_json(const LabeledGraph& g, const LabelingFailure& f) {
  Json edges = Json::array({g.edge(f.first).id});
  if (f.second) edges.push_back(g.edge(*f.second).id);
  return {{"vertex", g.vertex_name(f.vertex)},
          {"cause", std::string(to_string(f.cause))},
          {"edges", std::move(edges)}};
}

Json id_list(const LabeledGraph& g, const Subgraph& sub, bool edges) {
  Json out = Json::array();
  if (edges) {
    for (EdgeIndex e : sub.edges) out.push_back(g.edge(e).id);
  } else {
    for (VertexIndex v : sub.vertices) out.push_back(g.vertex_name(v));
  }
  return out;
}

}  // namespace

Json condition_json(const LabeledGraph& g, const ConditionResult& cond) {
  Json comps = Json::array();
  for (const auto& c : cond.components) {
    Json zeta = Json::object();
    for (VertexIndex v : c.labeling.order) zeta[g.vertex_name(v)] = *c.labeling.zeta[v];
    Json item{{"vertices", id_list(g, c.component, false)},
              {"edges", id_list(g, c.component, true)},
              {"complete", c.labeling.complete},
              {"zeta", std::move(zeta)}};
    item["failure"] = c.labeling.failure ? failure_json(g, *c.labeling.failure) : Json(nullptr);
    comps.push_back(std::move(item));
  }
  return {{"applicable", true},
          {"prime", integer_json(cond.prime)},
          {"gamma_prime_edges", id_list(g, cond.gamma_prime, true)},
          {"components", std::move(comps)},
          {"holds", cond.holds}};
}

Json witness_json(const LabeledGraph& reduced, const Witness& w) {
  if (w.empty()) return nullptr;
  Json out = Json::object();
  if (w.prime) out["prime"] = integer_json(*w.prime);
  if (w.order) out["order"] = integer_json(*w.order);
  if (w.edge) out["edge"] = reduced.edge(*w.edge).id;
  if (w.label) out["label"] = integer_json(*w.label);
  if (w.modulus) out["modulus"] = rational_json(*w.modulus);
  if (!w.primes.empty()) {
    Json ps = Json::array();
    for (const auto& p : w.primes) ps.push_back(integer_json(p));
    out["primes"] = std::move(ps);
  }
  if (w.elliptic) out["elliptic"] = failure_json(reduced, *w.elliptic);
  return out;
}

Json verdict_json(const LabeledGraph& reduced, const Verdict& v) {
  Json trace = Json::array();
  for (const auto& t : v.trace) trace.push_back({{"citation", t.citation}, {"reason", t.reason}});
  Json out{{"property", std::string(to_string(v.property))}};
  if (v.rho) out["rho"] = v.rho->to_string();
  out["holds"] = v.holds;
  out["trace"] = std::move(trace);
  out["witness"] = witness_json(reduced, v.witness);
  return out;
}

Json report_json(const Report& report, bool detailed) {
  const Analysis& a = report.analysis;
  Json out{{"shape", shape_json(a.shape)}};
  out["modular_image"] =
      a.image ? modular_json(*a.image)
              : Json{{"defined", false}, {"reason", "elementary group"}};
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(verdict_json(a.reduced(), v));
  out["verdicts"] = std::move(verdicts);
  if (detailed) {
    out["reduced_graph"] = graph_json(a.reduced());
    out["reduction_trace"] = trace_json(a.shape.reduction.trace);
    out["radical"] = a.radical ? radical_json(a.reduced(), *a.radical) : Json(nullptr);
    out["elliptic_condition"] = a.condition ? condition_json(a.reduced(), *a.condition) : Json(nullptr);
  }
  return out;
}

}  // namespace gbs
