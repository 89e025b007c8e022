#pragma once

// The modular homomorphism on stable letters, the class of its image and the
// subring of Q that image generates.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct DeltaGenerator {
  EdgeIndex edge = 0;
  std::string edge_id;
  Rational value;
};

// Modulus of the stable letter of every non-tree edge, read off the signed
// potentials: label(-e) r(terminus) / (label(+e) r(origin)). No shape check.
std::vector<DeltaGenerator> letter_moduli(const LabeledGraph& g, const SpanningData& t);

// As letter_moduli, but throws NotDefined when the group is elementary.
std::vector<DeltaGenerator> delta_generators(const LabeledGraph& g, const SpanningData& t);

enum class ImageClass { Trivial, PlusMinusOne, Other };

std::string_view to_string(ImageClass c);

struct ModularImage {
  ImageClass kind = ImageClass::Trivial;
  std::optional<Rational> witness;      // Other: first generator not +-1
  std::optional<std::string> witness_edge;
  std::vector<DeltaGenerator> generators;

  bool within_units() const { return kind != ImageClass::Other; }
};

ModularImage classify_modular_image(const std::vector<Rational>& values);
ModularImage classify_modular_image(std::vector<DeltaGenerator> generators);

// Image of a non-elementary graph (reduced or not), computed on its own tree.
ModularImage modular_image(const LabeledGraph& g);

// Z[1/p : p in inverted_primes]
struct ModularSubring {
  std::vector<Integer> inverted_primes;
};

ModularSubring modular_subring(const std::vector<Rational>& values);

}  // namespace gbs
