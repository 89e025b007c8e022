#include "gbs/fuzz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gbs/arithmetic.hpp"
#include "gbs/error.hpp"

namespace gbs {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

namespace {

const std::vector<std::vector<int>> kSupports = {{2}, {3}, {5}, {2, 3}, {3, 5}, {2, 3, 5}, {7}};

std::vector<int> magnitudes(const std::vector<int>& support) {
  std::vector<int> out;
  for (int m = 2; m <= 12; ++m) {
    int rest = m;
    for (int p : support) {
      while (rest % p == 0) rest /= p;
    }
    if (rest == 1) out.push_back(m);
  }
  return out;
}

Integer draw_label(Rng& rng, const std::vector<int>& mags) {
  Integer m = rng.chance(25) ? 1 : mags[rng.below(mags.size())];
  return rng.chance(30) ? Integer(-m) : m;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

LabeledGraph random_graph(Rng& rng) {
  const std::size_t n = 1 + rng.below(6);
  const std::size_t edges_total = (n - 1) + rng.below(8 - (n - 1) + 1);
  const auto& support = kSupports[rng.below(kSupports.size())];
  const auto mags = magnitudes(support);
  const bool balanced = rng.chance(75);

  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
  shuffle(names, rng);

  std::vector<LabeledEdge> edges;
  std::vector<Rational> scale(n, Rational(1));
  for (std::size_t v = 1; v < n; ++v) {
    VertexIndex parent = rng.below(v);
    Integer near = draw_label(rng, mags), far = draw_label(rng, mags);
    scale[v] = scale[parent] * make_rational(abs_value(near), abs_value(far));
    edges.push_back({"", parent, v, near, far});
  }
  while (edges.size() < edges_total) {
    VertexIndex a = rng.below(n), b = rng.below(n);
    Integer plus = draw_label(rng, mags), minus = draw_label(rng, mags);
    if (balanced) {
      // |minus| / |plus| = s(a) / s(b) keeps the cycle modulus at +-1
      Rational ratio = scale[a] / scale[b];
      ratio.canonicalize();
      const Integer num = ratio.get_num(), den = ratio.get_den();
      std::vector<int> factors{1};
      factors.insert(factors.end(), mags.begin(), mags.end());
      std::vector<int> fitting;
      for (int c : factors) {
        if (c * std::max(num, den) <= 12) fitting.push_back(c);
      }
      if (!fitting.empty()) {
        const int c = fitting[rng.below(fitting.size())];
        plus = den * c * (rng.chance(30) ? -1 : 1);
        minus = num * c * (rng.chance(30) ? -1 : 1);
      }
    }
    edges.push_back({"", a, b, plus, minus});
  }
  for (auto& e : edges) {
    if (rng.chance(50)) {
      std::swap(e.origin, e.terminus);
      std::swap(e.label_plus, e.label_minus);
    }
  }
  shuffle(edges, rng);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].id = "e" + std::to_string(i + 1);
  return LabeledGraph(std::move(names), std::move(edges));
}

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "labeling_matches_oracle", "labeling_order_independent", "labeling_consistent",
      "reduce_idempotent",       "trace_replays",              "t_positive_form",
      "delta_root_independent",  "collapse_invariance",        "sign_change_invariance",
      "mu_divides_labels",       "k_two_sided",                "mu_scale_constant",
      "sigma_extension",         "sigma_extension_control",    "sigma_cyclic",
      "sigma_cyclic_control",    "torsion_free_solvable",      "monotone_implications",
      "rf_matches_all_primes",
  };
  return names;
}

namespace {

int negated_xi(const LabeledEdge& e) { return -xi(e); }

// Everything the metamorphic checks compare.
std::string signature(const LabeledGraph& g) {
  static const std::vector<PrimeSet> rhos = {PrimeSet::all(), PrimeSet::of({2}), PrimeSet::of({3}),
                                             PrimeSet::of({2, 3}), PrimeSet::of({5})};
  const Analysis a = analyze(g);
  std::ostringstream out;
  out << "image=" << (a.image ? std::string(to_string(a.image->kind)) : "undefined");
  out << " mu=" << (a.radical ? a.radical->mu.get_str() : "-");
  out << " RF=" << check_residually_finite(a).holds;
  for (const auto& rho : rhos) out << " R[" << rho.to_string() << "]=" << check_residually_rho(a, rho).holds;
  out << " RN=" << check_residually_nilpotent(a).holds;
  auto free = check_residually_free(a);
  out << " RTFN=" << free.torsion_free_nilpotent.holds << " Free=" << free.residually_free.holds;
  return out.str();
}

std::vector<Integer> abs_labels(const LabeledGraph& g) {
  std::vector<Integer> out;
  for (const auto& e : g.edges()) {
    out.push_back(abs_value(e.label_plus));
    out.push_back(abs_value(e.label_minus));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Potentials along the edges of `t` propagated from another root.
std::vector<Rational> reroot(const LabeledGraph& g, const SpanningData& t, VertexIndex root) {
  std::vector<Rational> r(g.vertex_count(), Rational(0));
  std::vector<bool> seen(g.vertex_count(), false);
  r[root] = 1;
  seen[root] = true;
  std::vector<VertexIndex> stack{root};
  while (!stack.empty()) {
    VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : t.tree_edges) {
      const auto& edge = g.edge(e);
      if (edge.origin != u && edge.terminus != u) continue;
      const int eps = edge.origin == u ? 1 : -1;
      VertexIndex w = edge.end(-eps);
      if (seen[w]) continue;
      seen[w] = true;
      r[w] = r[u] * make_rational(edge.label(eps), edge.label(-eps));
      stack.push_back(w);
    }
  }
  return r;
}

struct Checker {
  const FuzzOptions& options;
  std::vector<InvariantTally>* tallies;
  std::vector<std::pair<std::string, std::string>> violations;

  void check(const std::string& name, bool ok, const std::string& detail) {
    if (tallies) {
      for (auto& t : *tallies) {
        if (t.name == name) {
          ++t.checked;
          if (!ok) ++t.failed;
        }
      }
    }
    if (!ok) violations.emplace_back(name, detail);
  }
};

void check_radical(Checker& c, const LabeledGraph& g, const RadicalData& rad, const char* where) {
  Integer product = 1;
  for (const auto& e : g.edges()) product *= abs_value(Integer(e.label_plus * e.label_minus));
  c.check("mu_divides_labels", mpz_divisible_p(product.get_mpz_t(), rad.mu.get_mpz_t()) != 0,
          std::string(where) + ": mu " + rad.mu.get_str() + " does not divide " + product.get_str());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    Rational plus = edge_index_at(g, rad, e, 1), minus = edge_index_at(g, rad, e, -1);
    c.check("k_two_sided", plus == minus && plus.get_den() == 1 && plus == Rational(rad.k_e[e]),
            std::string(where) + ": edge " + g.edge(e).id + " gives " + to_string(plus) + " and " +
                to_string(minus));
  }
  bool constant = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) constant = constant && Rational(rad.mu_v[v]) * rad.scale[v] == rad.M;
  c.check("mu_scale_constant", constant, std::string(where) + ": mu_v * s(v) differs from M");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> check_invariants(
    const LabeledGraph& g, Rng& rng, const FuzzOptions& options,
    std::vector<InvariantTally>* tallies) {
  Checker c{options, tallies, {}};
  const EdgeSign sign = options.negate_xi ? negated_xi : xi;

  // sign labeling against the cycle oracle, on the whole graph
  const Subgraph whole = whole_graph(g);
  const ConditionResult base = label_components(g, whole, nullptr, sign);
  const bool oracle = oracle_cycle_check(g, whole);
  c.check("labeling_matches_oracle", base.holds == oracle,
          "labeling says " + std::to_string(base.holds) + ", oracle says " + std::to_string(oracle));
  for (std::size_t k = 0; k < options.labeling_orders; ++k) {
    VertexSelector pick = [&rng](const std::vector<VertexIndex>& cands) { return rng.below(cands.size()); };
    const bool other = label_components(g, whole, &pick, sign).holds;
    c.check("labeling_order_independent", other == base.holds, "a random vertex order changed the outcome");
  }
  if (base.holds) {
    bool consistent = true;
    for (const auto& comp : base.components) {
      const auto& z = comp.labeling;
      consistent = consistent && !z.order.empty() && z.zeta[z.order.front()] == 1;
      for (EdgeIndex e : comp.component.edges) {
        const auto& edge = g.edge(e);
        consistent = consistent && *z.zeta[edge.origin] * *z.zeta[edge.terminus] == xi(edge);
      }
    }
    c.check("labeling_consistent", consistent, "complete labeling violates zeta*zeta = xi");
  }

  // normal forms
  const Reduction red = reduce(g);
  c.check("reduce_idempotent", reduce(red.graph).graph == red.graph && is_reduced(red.graph),
          "reducing the reduced graph changed it");
  c.check("trace_replays", replay(g, red.trace) == red.graph, "replayed trace differs");
  const SpanningData t = spanning_tree(g);
  const LabeledGraph tp = make_t_positive(g, t);
  c.check("t_positive_form", is_t_positive(tp, spanning_tree(tp)) && abs_labels(tp) == abs_labels(g),
          "tree-positive pass left a negative tree label or changed |labels|");

  // modular values do not depend on where the potentials start
  const auto moduli = letter_moduli(g, t);
  const auto r = reroot(g, t, rng.below(g.vertex_count()));
  bool same = true;
  for (const auto& d : moduli) {
    const auto& e = g.edge(d.edge);
    same = same && Rational(e.label_minus) * r[e.terminus] / (Rational(e.label_plus) * r[e.origin]) == d.value;
  }
  const auto other_tree = spanning_tree(g, rng.below(g.vertex_count()));
  same = same && classify_modular_image(letter_moduli(g, other_tree)).kind ==
                     classify_modular_image(moduli).kind;
  c.check("delta_root_independent", same, "modular values moved with the root");

  // metamorphic: verdicts survive other collapse orders and sign changes
  const std::string sig = signature(g);
  for (std::size_t k = 0; k < options.collapse_orders; ++k) {
    const std::size_t steps = k == 0 ? SIZE_MAX : rng.below(g.edge_count() + 1);
    LabeledGraph variant = g;
    for (std::size_t s = 0; s < steps; ++s) {
      auto cands = collapse_candidates(variant);
      if (cands.empty()) break;
      auto pick = cands[rng.below(cands.size())];
      variant = elementary_collapse(variant, pick.edge, pick.eps);
    }
    const std::string vs = signature(variant);
    c.check("collapse_invariance", vs == sig, sig + " vs " + vs + " after collapses");
  }
  {
    LabeledGraph variant = g;
    const std::size_t flips = 1 + rng.below(options.max_sign_changes);
    for (std::size_t s = 0; s < flips; ++s) {
      if (rng.chance(50)) {
        variant = flip_vertex(variant, rng.below(variant.vertex_count()));
      } else if (variant.edge_count() > 0) {
        variant = flip_edge(variant, rng.below(variant.edge_count()));
      }
    }
    const std::string vs = signature(variant);
    c.check("sign_change_invariance", vs == sig, sig + " vs " + vs + " after sign changes");
  }

  // radical and the two certifying homomorphisms
  const Analysis a = analyze(g);
  if (a.radical) check_radical(c, a.reduced(), *a.radical, "reduced");
  if (a.image && a.image->within_units()) {
    check_radical(c, g, compute_radical(g), "input");
    const RadicalData rad = compute_radical(tp);
    SigmaHom sigma = build_extension_sigma(tp, rad);
    auto ver = verify_sigma(tp, sigma);
    c.check("sigma_extension", ver.holds,
            ver.first_failure ? "relation on edge " + tp.edge(ver.first_failure->edge).id + " fails" : "");
    auto bad = sigma;
    auto letter = std::find_if(bad.letter_images.begin(), bad.letter_images.end(),
                               [](const auto& q) { return q.has_value(); });
    if (letter != bad.letter_images.end()) {
      **letter = -**letter;
    } else {
      bad.vertex_images[0] *= 2;
    }
    c.check("sigma_extension_control", tp.edge_count() == 0 || !verify_sigma(tp, bad).holds,
            "corrupted homomorphism still verified");
  }
  if (a.condition && a.condition->holds) {
    const auto& rg = a.reduced();
    auto sigma = build_cyclic_sigma(rg, *a.radical, a.condition->combined_zeta(rg.vertex_count()));
    auto ver = verify_sigma(rg, sigma);
    c.check("sigma_cyclic", ver.holds && cyclic_orders(sigma) == a.radical->mu_v,
            "cyclic homomorphism fails its relations or orders");
    if (a.radical->mu_v[0] > 1) {
      auto bad = sigma;
      bad.vertex_images[0] = 0;
      c.check("sigma_cyclic_control",
              !(verify_sigma(rg, bad).holds && cyclic_orders(bad) == a.radical->mu_v),
              "corrupted cyclic homomorphism still verified");
    }
  }

  // verdict-level facts
  Report report{a, {}};
  report.verdicts.push_back(check_residually_finite(a));
  report.verdicts.push_back(check_residually_nilpotent(a));
  auto free = check_residually_free(a);
  report.verdicts.push_back(free.torsion_free_nilpotent);
  report.verdicts.push_back(free.residually_free);
  report.verdicts.push_back(check_torsion_free_solvable(a));
  const bool rf = report.verdict(Property::ResiduallyFinite).holds;
  const bool rn = report.verdict(Property::ResiduallyNilpotent).holds;
  const bool tfn = report.verdict(Property::ResiduallyTorsionFreeNilpotent).holds;
  const bool fr = report.verdict(Property::ResiduallyFree).holds;
  c.check("torsion_free_solvable", report.verdict(Property::ResiduallyTorsionFreeSolvable).holds,
          "torsion-free solvable verdict is false");
  c.check("monotone_implications", (!fr || tfn) && (!tfn || rn) && (!rn || rf) && fr == tfn,
          "free => torsion-free nilpotent => nilpotent => finite is broken");
  c.check("rf_matches_all_primes", check_residually_rho(a, PrimeSet::all()).holds == rf,
          "residually finite differs from residually-rho over all primes");
  return c.violations;
}

namespace {

bool still_violates(const LabeledGraph& g, const std::string& invariant, std::uint64_t seed,
                    const FuzzOptions& options) {
  Rng rng(seed);
  for (const auto& [name, detail] : check_invariants(g, rng, options)) {
    if (name == invariant) return true;
  }
  return false;
}

std::optional<LabeledGraph> try_build(std::vector<std::string> names, std::vector<LabeledEdge> edges) {
  try {
    return LabeledGraph(std::move(names), std::move(edges));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

LabeledGraph shrink(const LabeledGraph& g, const std::string& invariant, std::uint64_t seed,
                    const FuzzOptions& options) {
  LabeledGraph cur = g;
  for (bool progress = true; progress;) {
    progress = false;
    for (EdgeIndex e = 0; e < cur.edge_count() && !progress; ++e) {
      auto edges = cur.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
      auto cand = try_build(cur.vertices(), std::move(edges));
      if (cand && still_violates(*cand, invariant, seed, options)) {
        cur = *cand;
        progress = true;
      }
    }
    for (VertexIndex v = 0; v < cur.vertex_count() && !progress && cur.vertex_count() > 1; ++v) {
      std::vector<std::string> names;
      std::vector<VertexIndex> renumber(cur.vertex_count());
      for (VertexIndex u = 0; u < cur.vertex_count(); ++u) {
        if (u == v) continue;
        renumber[u] = names.size();
        names.push_back(cur.vertex_name(u));
      }
      std::vector<LabeledEdge> edges;
      for (auto e : cur.edges()) {
        if (e.origin == v || e.terminus == v) continue;
        e.origin = renumber[e.origin];
        e.terminus = renumber[e.terminus];
        edges.push_back(std::move(e));
      }
      auto cand = try_build(std::move(names), std::move(edges));
      if (cand && still_violates(*cand, invariant, seed, options)) {
        cur = *cand;
        progress = true;
      }
    }
    for (EdgeIndex e = 0; e < cur.edge_count() && !progress; ++e) {
      const auto& edge = cur.edge(e);
      Integer common;
      mpz_gcd(common.get_mpz_t(), edge.label_plus.get_mpz_t(), edge.label_minus.get_mpz_t());
      if (common == 1) continue;
      for (const auto& p : prime_divisors(common)) {
        auto edges = cur.edges();
        edges[e].label_plus /= p;
        edges[e].label_minus /= p;
        auto cand = try_build(cur.vertices(), std::move(edges));
        if (cand && still_violates(*cand, invariant, seed, options)) {
          cur = *cand;
          progress = true;
          break;
        }
      }
    }
  }
  return cur;
}

std::size_t FuzzReport::violations() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

const InvariantTally& FuzzReport::tally(const std::string& name) const {
  for (const auto& t : tallies) {
    if (t.name == name) return t;
  }
  throw Error(ErrorCode::UnknownTarget, "no invariant " + name);
}

FuzzReport run_fuzz(const FuzzOptions& options) {
  if (options.count == 0) throw Error(ErrorCode::UsageError, "fuzz needs --count >= 1");
  FuzzReport report;
  report.options = options;
  for (const auto& name : invariant_names()) report.tallies.push_back({name, 0, 0});
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::uint64_t graph_seed = splitmix64(options.seed) ^ splitmix64(i);
    Rng gen(graph_seed);
    const LabeledGraph g = random_graph(gen);
    const std::uint64_t check_seed = graph_seed + 1;
    Rng rng(check_seed);
    for (const auto& [name, detail] : check_invariants(g, rng, options, &report.tallies)) {
      if (seen.count(name)) continue;
      seen[name] = i;
      report.findings.push_back(
          {i, name, detail, graph_json(g), graph_json(shrink(g, name, check_seed, options))});
    }
  }
  return report;
}

Json fuzz_json(const FuzzReport& report) {
  Json tallies = Json::array();
  for (const auto& t : report.tallies) {
    tallies.push_back({{"invariant", t.name}, {"checked", t.checked}, {"failed", t.failed}});
  }
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"iteration", f.iteration},
                        {"invariant", f.invariant},
                        {"detail", f.detail},
                        {"graph", f.original},
                        {"minimized", f.minimized}});
  }
  return {{"seed", report.options.seed},
          {"count", report.options.count},
          {"violations", report.violations()},
          {"invariants", std::move(tallies)},
          {"counterexamples", std::move(findings)}};
}

std::string fuzz_text(const FuzzReport& report) {
  std::ostringstream out;
  out << "fuzz seed=" << report.options.seed << " count=" << report.options.count << "\n";
  for (const auto& t : report.tallies) {
    out << "  " << t.name << ": " << t.checked << " checked, " << t.failed << " failed\n";
  }
  out << report.violations() << " violation(s)\n";
  for (const auto& f : report.findings) {
    out << "counterexample for " << f.invariant << " at iteration " << f.iteration << ": " << f.detail
        << "\n  minimized: " << f.minimized.dump() << "\n";
  }
  return out.str();
}

}  // namespace gbs
