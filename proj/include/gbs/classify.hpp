#pragma once

// Residual-property verdicts for the group of a labeled graph. Every verdict
// carries the theorem clauses it was decided by.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/arithmetic.hpp"
#include "gbs/graph.hpp"
#include "gbs/modular.hpp"
#include "gbs/nilpotence.hpp"
#include "gbs/radical.hpp"
#include "gbs/shape.hpp"

namespace gbs {

enum class Property {
  ResiduallyFinite,
  ResiduallyRho,
  ResiduallyNilpotent,
  ResiduallyTorsionFreeNilpotent,
  ResiduallyFree,
  ResiduallyTorsionFreeSolvable,
};

std::string_view to_string(Property p);

struct TraceEntry {
  std::string citation;
  std::string reason;
};

// Machine-readable evidence. Vertex and edge indices refer to the reduced graph.
struct Witness {
  std::optional<Integer> prime;
  std::optional<Integer> order;          // multiplicative order behind a BS(1,n) verdict
  std::optional<EdgeIndex> edge;
  std::optional<Integer> label;          // a label outside the admissible primes
  std::optional<Rational> modulus;       // a modular value outside {1,-1}
  std::vector<Integer> primes;           // label primes, when too many
  std::optional<LabelingFailure> elliptic;

  bool empty() const {
    return !prime && !order && !edge && !label && !modulus && primes.empty() && !elliptic;
  }
};

struct Verdict {
  Property property = Property::ResiduallyFinite;
  std::optional<PrimeSet> rho;
  bool holds = false;
  std::vector<TraceEntry> trace;
  Witness witness;
};

// Everything the verdicts are read from, computed once.
struct Analysis {
  GroupShape shape;
  std::optional<ModularImage> image;       // on the input graph; absent when elementary
  std::optional<RadicalData> radical;      // on the reduced graph, non-solvable with image in {1,-1}
  std::vector<Integer> label_primes;       // distinct primes over all reduced labels
  std::optional<ConditionResult> condition;  // non-solvable, image {1,-1}, one odd prime

  const LabeledGraph& reduced() const { return shape.reduced(); }
};

Analysis analyze(const LabeledGraph& g);

Verdict check_residually_rho(const Analysis& a, const PrimeSet& rho);
Verdict check_residually_finite(const Analysis& a);
Verdict check_residually_nilpotent(const Analysis& a);

struct FreeVerdicts {
  Verdict residually_free;
  Verdict torsion_free_nilpotent;
};

FreeVerdicts check_residually_free(const Analysis& a);
Verdict check_torsion_free_solvable(const Analysis& a);

Verdict check_residually_rho(const LabeledGraph& g, const PrimeSet& rho);
Verdict check_residually_finite(const LabeledGraph& g);
Verdict check_residually_nilpotent(const LabeledGraph& g);
FreeVerdicts check_residually_free(const LabeledGraph& g);

struct Report {
  Analysis analysis;
  std::vector<Verdict> verdicts;

  const Verdict& verdict(Property p) const;
};

// Verdicts in Property order; ResiduallyRho only when rho is given.
Report classify_all(const LabeledGraph& g, const std::optional<PrimeSet>& rho = std::nullopt);

}  // namespace gbs
