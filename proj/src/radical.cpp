#include "gbs/radical.hpp"

#include "gbs/arithmetic.hpp"
#include "gbs/error.hpp"
#include "gbs/modular.hpp"
#include "gbs/normalize.hpp"
#include "gbs/shape.hpp"

namespace gbs {

namespace {

Integer to_integer(const Rational& q, const char* what) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw Error(ErrorCode::PreconditionViolated,
                std::string(what) + " is not integral: " + to_string(c));
  }
  return c.get_num();
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

RadicalData compute_radical(const LabeledGraph& g) {
  if (detect_shape(g).elementary()) {
    throw Error(ErrorCode::Elementary, "no radical data for elementary groups");
  }
  const SpanningData t = spanning_tree(g);
  for (const auto& gen : letter_moduli(g, t)) {
    if (abs_value(gen.value) != 1) {
      throw Error(ErrorCode::ModularImageTooBig,
                  "modulus " + to_string(gen.value) + " on edge " + gen.edge_id);
    }
  }

  RadicalData rad;
  rad.scale = t.scale;
  std::vector<Rational> multiples;
  for (const auto& e : g.edges()) {
    for (int eps : {1, -1}) multiples.push_back(Rational(abs_value(e.label(eps))) * t.scale[e.end(eps)]);
  }
  rad.M = rational_lcm(multiples);

  rad.mu = 1;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    rad.mu_v.push_back(to_integer(rad.M / t.scale[v], "vertex index"));
    mpz_lcm(rad.mu.get_mpz_t(), rad.mu.get_mpz_t(), rad.mu_v.back().get_mpz_t());
  }
  for (const auto& e : g.edges()) {
    rad.k_e.push_back(to_integer(Rational(rad.mu_v[e.origin], abs_value(e.label_plus)), "edge index"));
  }
  rad.cyclic_radical = is_reduced(g);
  return rad;
}

Rational edge_index_at(const LabeledGraph& g, const RadicalData& rad, EdgeIndex e, int eps) {
  const auto& edge = g.edge(e);
  return make_rational(rad.mu_v.at(edge.end(eps)), abs_value(edge.label(eps)));
}

SigmaHom build_extension_sigma(const LabeledGraph& g, const RadicalData& rad) {
  const SpanningData t = spanning_tree(g);
  if (!is_t_positive(g, t)) {
    throw Error(ErrorCode::PreconditionViolated, "graph is not positive on its spanning tree");
  }
  SigmaHom sigma;
  sigma.target = SigmaTarget::Extension;
  for (const auto& m : rad.mu_v) sigma.vertex_images.push_back(rad.mu / m);
  sigma.letter_images.assign(g.edge_count(), std::nullopt);
  for (const auto& gen : letter_moduli(g, t)) sigma.letter_images[gen.edge] = gen.value;
  return sigma;
}

SigmaHom build_cyclic_sigma(const LabeledGraph& g, const RadicalData& rad,
                            const std::vector<std::optional<int>>& zeta) {
  if (zeta.size() != g.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, "labeling does not cover the graph");
  }
  SigmaHom sigma;
  sigma.target = SigmaTarget::Cyclic;
  sigma.modulus = rad.mu;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!zeta[v]) {
      throw Error(ErrorCode::ConditionFails, "vertex " + g.vertex_name(v) + " has no label");
    }
    sigma.vertex_images.push_back(mod_floor(Integer(*zeta[v] * (rad.mu / rad.mu_v[v])), rad.mu));
  }
  const SpanningData t = spanning_tree(g);
  sigma.letter_images.assign(g.edge_count(), std::nullopt);
  for (EdgeIndex e : t.non_tree_edges()) sigma.letter_images[e] = Rational(0);
  return sigma;
}

SigmaVerification verify_sigma(const LabeledGraph& g, const SigmaHom& sigma) {
  SigmaVerification out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    RelationCheck check;
    check.edge = e;
    check.tree_edge = !sigma.letter_images.at(e).has_value();
    Rational lhs = Rational(edge.label_plus * sigma.vertex_images.at(edge.origin));
    Rational rhs = Rational(edge.label_minus * sigma.vertex_images.at(edge.terminus));
    if (sigma.target == SigmaTarget::Extension) {
      // conjugation by a_q scales the Q component by q
      if (!check.tree_edge) lhs *= *sigma.letter_images[e];
      check.holds = lhs == rhs;
    } else {
      lhs = Rational(mod_floor(to_integer(lhs, "image"), sigma.modulus));
      rhs = Rational(mod_floor(to_integer(rhs, "image"), sigma.modulus));
      check.holds = lhs == rhs;
    }
    check.lhs = lhs;
    check.rhs = rhs;
    if (!check.holds && out.holds) {
      out.holds = false;
      out.first_failure = check;
    }
    out.relations.push_back(std::move(check));
  }
  return out;
}

std::vector<Integer> cyclic_orders(const SigmaHom& sigma) {
  if (sigma.target != SigmaTarget::Cyclic) {
    throw Error(ErrorCode::PreconditionViolated, "orders are defined for the cyclic target only");
  }
  std::vector<Integer> out;
  for (const auto& img : sigma.vertex_images) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), img.get_mpz_t(), sigma.modulus.get_mpz_t());
    out.push_back(sigma.modulus / g);
  }
  return out;
}

}  // namespace gbs
