#include "gbs/classify.hpp"

#include <algorithm>

#include "gbs/error.hpp"
#include "gbs/normalize.hpp"

namespace gbs {

namespace {

std::string image_text(ImageClass c) {
  switch (c) {
    case ImageClass::Trivial: return "{1}";
    case ImageClass::PlusMinusOne: return "{1,-1}";
    case ImageClass::Other: return "not inside {1,-1}";
  }
  return "?";
}

Verdict make(Property p, bool holds, std::string citation, std::string reason) {
  Verdict v;
  v.property = p;
  v.holds = holds;
  v.trace.push_back({std::move(citation), std::move(reason)});
  return v;
}

// First label of the reduced graph that is not a rho-number.
std::optional<std::pair<EdgeIndex, Integer>> bad_label(const LabeledGraph& g, const PrimeSet& rho) {
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (int eps : {1, -1}) {
      if (!is_rho_number(g.edge(e).label(eps), rho)) return std::make_pair(e, g.edge(e).label(eps));
    }
  }
  return std::nullopt;
}

std::string prime_list(const std::vector<Integer>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ",") + p.get_str();
  return "{" + out + "}";
}

const ModularImage& image_of(const Analysis& a) {
  if (!a.image) throw Error(ErrorCode::NotDefined, "modular image of an elementary group");
  return *a.image;
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::ResiduallyFinite: return "ResiduallyFinite";
    case Property::ResiduallyRho: return "ResiduallyRho";
    case Property::ResiduallyNilpotent: return "ResiduallyNilpotent";
    case Property::ResiduallyTorsionFreeNilpotent: return "ResiduallyTorsionFreeNilpotent";
    case Property::ResiduallyFree: return "ResiduallyFree";
    case Property::ResiduallyTorsionFreeSolvable: return "ResiduallyTorsionFreeSolvable";
  }
  return "?";
}

Analysis analyze(const LabeledGraph& g) {
  Analysis a{detect_shape(g), std::nullopt, std::nullopt, {}, std::nullopt};
  const LabeledGraph& r = a.reduced();
  for (const auto& e : r.edges()) {
    for (int eps : {1, -1}) {
      auto ps = prime_divisors(e.label(eps));
      a.label_primes.insert(a.label_primes.end(), ps.begin(), ps.end());
    }
  }
  std::sort(a.label_primes.begin(), a.label_primes.end());
  a.label_primes.erase(std::unique(a.label_primes.begin(), a.label_primes.end()),
                       a.label_primes.end());

  if (a.shape.elementary()) return a;
  a.image = classify_modular_image(letter_moduli(g, spanning_tree(g)));
  if (a.shape.solvable() || !a.image->within_units()) return a;
  a.radical = compute_radical(r);
  if (a.image->kind == ImageClass::PlusMinusOne && a.label_primes.size() == 1 &&
      a.label_primes.front() != 2) {
    a.condition = check_condition(r, *a.radical);
  }
  return a;
}

Verdict check_residually_rho(const Analysis& a, const PrimeSet& rho) {
  const Property P = Property::ResiduallyRho;
  const std::string set = "rho = " + rho.to_string();
  Verdict v;
  switch (a.shape.kind) {
    case ShapeKind::Cyclic:
      v = make(P, true, "Theorem 1(2)", "Z is a subgroup of BS(1,1) and 1 is a rho-number");
      break;
    case ShapeKind::ZxZ:
      v = make(P, true, "Theorem 1(2)", "BS(1,1): 1 is a rho-number");
      break;
    case ShapeKind::Klein:
      v = make(P, rho.contains(2), "Theorem 1(3)",
               "BS(1,-1) needs 2 in rho; " + set);
      break;
    case ShapeKind::BS1n: {
      const Integer& n = a.shape.n;
      const std::string group = "BS(1," + n.get_str() + ")";
      std::optional<Integer> found, order;
      if (rho.is_all()) {
        for (Integer p = 2;; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
          if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            found = p;
            order = multiplicative_order(n, p);
            break;
          }
        }
      } else {
        for (const auto& p : rho.primes()) {
          if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) continue;
          Integer k = multiplicative_order(n, p);
          if (is_rho_number(k, rho)) {
            found = p;
            order = k;
            break;
          }
        }
      }
      if (found) {
        v = make(P, true, "Theorem 1(4)",
                 group + ": p = " + found->get_str() + " does not divide n and the order of n mod p is " +
                     order->get_str() + ", a rho-number");
      } else {
        v = make(P, false, "Theorem 1(4)",
                 group + ": no p in rho avoids n with order of n mod p a rho-number; " + set);
      }
      v.witness.prime = found;
      v.witness.order = order;
      break;
    }
    case ShapeKind::NonSolvable: {
      const auto& img = image_of(a);
      if (img.kind == ImageClass::Other) {
        v = make(P, false, "Theorem 3(3)",
                 "modular image contains " + to_string(*img.witness));
        v.witness.modulus = img.witness;
        break;
      }
      const bool plus_minus = img.kind == ImageClass::PlusMinusOne;
      const std::string clause = plus_minus ? "Theorem 3(2)" : "Theorem 3(1)";
      if (auto bad = bad_label(a.reduced(), rho)) {
        v = make(P, false, clause,
                 "modular image " + image_text(img.kind) + "; label " + bad->second.get_str() +
                     " on edge " + a.reduced().edge(bad->first).id + " is not a rho-number");
        v.witness.edge = bad->first;
        v.witness.label = bad->second;
      } else if (plus_minus && !rho.contains(2)) {
        v = make(P, false, clause, "modular image {1,-1} and 2 is not in " + set);
      } else {
        v = make(P, true, clause,
                 "modular image " + image_text(img.kind) + "; all labels are rho-numbers" +
                     (plus_minus ? " and 2 is in rho" : ""));
      }
      break;
    }
  }
  v.rho = rho;
  return v;
}

Verdict check_residually_finite(const Analysis& a) {
  const Property P = Property::ResiduallyFinite;
  if (a.shape.solvable()) {
    return make(P, true, "Corollary 1(3)",
                "group is solvable (" + std::string(to_string(a.shape.kind)) + ")");
  }
  const auto& img = image_of(a);
  if (img.within_units()) {
    return make(P, true, "Corollary 1(3)",
                "non-solvable with modular image " + image_text(img.kind));
  }
  Verdict v = make(P, false, "Corollary 1(3)",
                   "non-solvable and modular image contains " + to_string(*img.witness));
  v.witness.modulus = img.witness;
  return v;
}

Verdict check_residually_nilpotent(const Analysis& a) {
  const Property P = Property::ResiduallyNilpotent;
  switch (a.shape.kind) {
    case ShapeKind::Cyclic:
      return make(P, true, "Theorem 2", "Z is a subgroup of BS(1,1) (m = 1, n = 1)");
    case ShapeKind::ZxZ:
      return make(P, true, "Theorem 2", "BS(1,1): m = 1 and n != 2");
    case ShapeKind::Klein:
      return make(P, true, "Theorem 2", "BS(1,-1): m = 1 and n != 2");
    case ShapeKind::BS1n:
      return make(P, a.shape.n != 2, "Theorem 2",
                  "BS(1," + a.shape.n.get_str() + "): m = 1 and n " +
                      (a.shape.n != 2 ? "!= 2" : "= 2"));
    case ShapeKind::NonSolvable:
      break;
  }
  const auto& img = image_of(a);
  const auto& primes = a.label_primes;
  if (img.kind == ImageClass::Other) {
    Verdict v = make(P, false, "Theorem 5(3)", "modular image contains " + to_string(*img.witness));
    v.witness.modulus = img.witness;
    return v;
  }
  if (img.kind == ImageClass::Trivial) {
    Verdict v = make(P, primes.size() <= 1, "Theorem 5(1)",
                     "modular image {1}; residually nilpotent iff residually a finite p-group");
    if (primes.size() <= 1) {
      const Integer p = primes.empty() ? Integer(2) : primes.front();
      v.trace.push_back({"Theorem 3(1)", "all labels are " + p.get_str() + "-numbers"});
      v.witness.prime = p;
    } else {
      v.trace.push_back({"Theorem 3(1)", "labels involve the primes " + prime_list(primes) +
                                             ", so no single p works"});
      v.witness.primes = primes;
    }
    return v;
  }
  // modular image {1,-1}
  if (primes.size() > 1) {
    Verdict v = make(P, false, "Theorem 5(2)",
                     "modular image {1,-1}; labels involve the primes " + prime_list(primes) +
                         ", not the powers of one prime");
    v.witness.primes = primes;
    return v;
  }
  const Integer p = primes.empty() ? Integer(2) : primes.front();
  if (p == 2) {
    Verdict v = make(P, true, "Theorem 5(2)",
                     "modular image {1,-1}; all labels are 2-numbers");
    v.witness.prime = p;
    return v;
  }
  const auto& cond = *a.condition;
  Verdict v = make(P, cond.holds, "Theorem 5(2)",
                   "modular image {1,-1}; all labels are " + p.get_str() +
                       "-numbers with p odd, so elliptic elements conjugate to their inverse must lie in "
                       "the cyclic radical");
  v.witness.prime = p;
  if (cond.holds) {
    v.trace.push_back({"Proposition 6.1",
                       "every component of the subgraph of edges with k_e > 1 is labeled consistently"});
    v.trace.push_back({"Proposition 6.2", "so the elliptic condition holds"});
  } else {
    const auto* bad = cond.first_failure();
    const auto& f = *bad->labeling.failure;
    const auto& r = a.reduced();
    std::string why = f.cause == FailureCause::NegativeLoop
                          ? "loop " + r.edge(f.first).id + " at " + r.vertex_name(f.vertex) +
                                " has negative sign"
                          : "edges " + r.edge(f.first).id + " and " + r.edge(*f.second).id +
                                " give conflicting labels at " + r.vertex_name(f.vertex);
    v.trace.push_back({"Proposition 6.1", "labeling fails: " + why});
    v.trace.push_back({"Proposition 6.2", "so some elliptic element conjugate to its inverse lies "
                                          "outside the cyclic radical"});
    v.witness.elliptic = f;
    v.witness.edge = f.first;
  }
  return v;
}

FreeVerdicts check_residually_free(const Analysis& a) {
  Verdict v;
  switch (a.shape.kind) {
    case ShapeKind::Cyclic:
      v = make(Property::ResiduallyFree, true, "Theorem 6",
               "Z is free; this case lies outside the theorem's non-cyclic hypothesis");
      break;
    case ShapeKind::ZxZ:
      v = make(Property::ResiduallyFree, true, "Theorem 6(3)", "Z x Z is F_1 x Z");
      break;
    case ShapeKind::Klein:
      v = make(Property::ResiduallyFree, false, "Theorem 6(3)",
               "the Klein bottle group has torsion in its abelianization, so it is not F x Z");
      break;
    case ShapeKind::BS1n:
      v = make(Property::ResiduallyFree, false, "Theorem 6(3)",
               "BS(1," + a.shape.n.get_str() + ") is solvable and not abelian, so it is not F x Z");
      break;
    case ShapeKind::NonSolvable: {
      const auto& img = image_of(a);
      const auto& r = a.reduced();
      std::optional<EdgeIndex> non_unit;
      for (EdgeIndex e = 0; e < r.edge_count() && !non_unit; ++e) {
        if (!is_unit(r.edge(e).label_plus) || !is_unit(r.edge(e).label_minus)) non_unit = e;
      }
      if (non_unit) {
        v = make(Property::ResiduallyFree, false, "Theorem 6(3)",
                 "edge " + r.edge(*non_unit).id + " has a label other than +-1, so the group is not F x Z");
        v.witness.edge = non_unit;
      } else if (img.kind != ImageClass::Trivial) {
        v = make(Property::ResiduallyFree, false, "Theorem 6(3)",
                 "unit labels but modular image " + image_text(img.kind) + ", so the group is not F x Z");
        v.witness.modulus = img.witness ? *img.witness : Rational(-1);
      } else {
        v = make(Property::ResiduallyFree, true, "Theorem 6(3)",
                 "one vertex with " + std::to_string(r.edge_count()) +
                     " central loops: F_" + std::to_string(r.edge_count()) + " x Z");
      }
      break;
    }
  }
  Verdict tfn = v;
  tfn.property = Property::ResiduallyTorsionFreeNilpotent;
  tfn.trace.push_back({"Theorem 6", "residually torsion-free nilpotent iff residually free"});
  return {std::move(v), std::move(tfn)};
}

Verdict check_torsion_free_solvable(const Analysis&) {
  return make(Property::ResiduallyTorsionFreeSolvable, true, "Corollary 3",
              "holds for every group of this family");
}

Verdict check_residually_rho(const LabeledGraph& g, const PrimeSet& rho) {
  return check_residually_rho(analyze(g), rho);
}
Verdict check_residually_finite(const LabeledGraph& g) { return check_residually_finite(analyze(g)); }
Verdict check_residually_nilpotent(const LabeledGraph& g) {
  return check_residually_nilpotent(analyze(g));
}
FreeVerdicts check_residually_free(const LabeledGraph& g) { return check_residually_free(analyze(g)); }

const Verdict& Report::verdict(Property p) const {
  for (const auto& v : verdicts) {
    if (v.property == p) return v;
  }
  throw Error(ErrorCode::NotDefined, "no verdict for " + std::string(to_string(p)));
}

Report classify_all(const LabeledGraph& g, const std::optional<PrimeSet>& rho) {
  Report report{analyze(g), {}};
  const Analysis& a = report.analysis;
  report.verdicts.push_back(check_residually_finite(a));
  if (rho) report.verdicts.push_back(check_residually_rho(a, *rho));
  report.verdicts.push_back(check_residually_nilpotent(a));
  auto free = check_residually_free(a);
  report.verdicts.push_back(std::move(free.torsion_free_nilpotent));
  report.verdicts.push_back(std::move(free.residually_free));
  report.verdicts.push_back(check_torsion_free_solvable(a));
  return report;
}

}  // namespace gbs
