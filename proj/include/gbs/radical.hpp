#pragma once

// The common finite-index subgroup K of all vertex groups (the cyclic radical
// on reduced graphs), its indices, and the two explicit homomorphisms that
// certify it: one onto an extension of Q by a free abelian group, one onto
// Z/mu.

#include <optional>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct RadicalData {
  Rational M;                  // K corresponds to M*Z on the potential line
  std::vector<Rational> scale; // tree potentials |r(v)| the indices were read from
  std::vector<Integer> mu_v;   // [G_v : K], by vertex
  Integer mu;                  // lcm of mu_v
  std::vector<Integer> k_e;    // [H_e : K], by edge, read from the origin side
  bool cyclic_radical = false; // K is the cyclic radical (graph was reduced)
};

// Requires a non-elementary graph whose modular image lies in {1,-1}.
// Throws Elementary or ModularImageTooBig.
RadicalData compute_radical(const LabeledGraph& g);

// mu_v(end(eps)) / |label(eps)|; equal to k_e on both ends when consistent.
Rational edge_index_at(const LabeledGraph& g, const RadicalData& rad, EdgeIndex e, int eps);

enum class SigmaTarget { Extension, Cyclic };

// Images of the vertex generators and stable letters. For the extension
// target a stable letter maps to the symbol a_q and letter_images holds q;
// for the cyclic target letters map to 0. Tree edges carry no letter.
struct SigmaHom {
  SigmaTarget target = SigmaTarget::Extension;
  std::vector<Integer> vertex_images;
  std::vector<std::optional<Rational>> letter_images;
  Integer modulus;  // cyclic target only
};

struct RelationCheck {
  EdgeIndex edge = 0;
  bool tree_edge = true;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct SigmaVerification {
  bool holds = true;
  std::vector<RelationCheck> relations;
  std::optional<RelationCheck> first_failure;
};

// g_v -> mu/mu_v, t_e -> a_{Delta(t_e)}. Needs a tree-positive graph.
SigmaHom build_extension_sigma(const LabeledGraph& g, const RadicalData& rad);

// g_v -> zeta(v) mu/mu_v in Z/mu, t_e -> 0. Throws ConditionFails when
// zeta leaves some vertex unlabeled.
SigmaHom build_cyclic_sigma(const LabeledGraph& g, const RadicalData& rad,
                            const std::vector<std::optional<int>>& zeta);

SigmaVerification verify_sigma(const LabeledGraph& g, const SigmaHom& sigma);

// Additive order of each vertex image in Z/mu.
std::vector<Integer> cyclic_orders(const SigmaHom& sigma);

}  // namespace gbs
