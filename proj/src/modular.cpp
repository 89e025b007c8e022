#include "gbs/modular.hpp"

#include <algorithm>

#include "gbs/arithmetic.hpp"
#include "gbs/error.hpp"
#include "gbs/shape.hpp"

namespace gbs {

std::vector<DeltaGenerator> letter_moduli(const LabeledGraph& g, const SpanningData& t) {
  std::vector<DeltaGenerator> out;
  for (EdgeIndex e : t.non_tree_edges()) {
    const auto& edge = g.edge(e);
    Rational num = Rational(edge.label_minus) * t.signed_scale[edge.terminus];
    Rational den = Rational(edge.label_plus) * t.signed_scale[edge.origin];
    Rational q = num / den;
    q.canonicalize();
    out.push_back({e, edge.id, q});
  }
  return out;
}

std::vector<DeltaGenerator> delta_generators(const LabeledGraph& g, const SpanningData& t) {
  if (detect_shape(g).elementary()) {
    throw Error(ErrorCode::NotDefined, "modular homomorphism is undefined on elementary groups");
  }
  return letter_moduli(g, t);
}

std::string_view to_string(ImageClass c) {
  switch (c) {
    case ImageClass::Trivial: return "Trivial";
    case ImageClass::PlusMinusOne: return "PlusMinusOne";
    case ImageClass::Other: return "Other";
  }
  return "?";
}

ModularImage classify_modular_image(std::vector<DeltaGenerator> generators) {
  ModularImage image;
  for (const auto& gen : generators) {
    if (abs_value(gen.value) != 1) {
      image.kind = ImageClass::Other;
      image.witness = gen.value;
      image.witness_edge = gen.edge_id;
      break;
    }
    if (gen.value == -1) image.kind = ImageClass::PlusMinusOne;
  }
  image.generators = std::move(generators);
  return image;
}

ModularImage classify_modular_image(const std::vector<Rational>& values) {
  std::vector<DeltaGenerator> gens;
  for (std::size_t i = 0; i < values.size(); ++i) gens.push_back({i, {}, values[i]});
  auto image = classify_modular_image(std::move(gens));
  image.witness_edge.reset();
  return image;
}

ModularImage modular_image(const LabeledGraph& g) {
  return classify_modular_image(delta_generators(g, spanning_tree(g)));
}

ModularSubring modular_subring(const std::vector<Rational>& values) {
  std::vector<Integer> primes;
  for (Rational q : values) {
    q.canonicalize();
    if (q == 0) throw Error(ErrorCode::ZeroInput, "zero is not a modulus");
    for (const Integer& part : {Integer(q.get_num()), Integer(q.get_den())}) {
      auto ps = prime_divisors(part);
      primes.insert(primes.end(), ps.begin(), ps.end());
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return {primes};
}

}  // namespace gbs
