#include <doctest.h>

#include "gbs/classify.hpp"
#include "gbs/error.hpp"
#include "gbs/fuzz.hpp"
#include "support.hpp"

using namespace gbs;
using gbs::testing::abelian_invariants;
using gbs::testing::derived;
using gbs::testing::loop;
using gbs::testing::make_graph;

namespace {

std::vector<Integer> ints(const nlohmann::json& j) {
  std::vector<Integer> out;
  for (long v : j.get<std::vector<long>>()) out.emplace_back(v);
  return out;
}

bool holds(const Report& r, Property p) { return r.verdict(p).holds; }

const LabeledGraph klein = make_graph({"x", "y"}, {{"e", "x", "y", 2, 2}});
const LabeledGraph loops_9_3 = make_graph({"v"}, {{"a", "v", "v", 9, 9}, {"b", "v", "v", 3, -3}});
const LabeledGraph unit_loops = make_graph({"v"}, {{"a", "v", "v", 1, 1}, {"b", "v", "v", 1, 1}});

}  // namespace

TEST_CASE("shapes") {
  CHECK(detect_shape(make_graph({"v"}, {})).kind == ShapeKind::Cyclic);
  CHECK(detect_shape(make_graph({"a", "b"}, {{"e", "a", "b", 1, 4}})).kind == ShapeKind::Cyclic);
  CHECK(detect_shape(loop(1, 1)).kind == ShapeKind::ZxZ);
  CHECK(detect_shape(loop(-1, -1)).kind == ShapeKind::ZxZ);
  CHECK(detect_shape(loop(1, -1)).kind == ShapeKind::Klein);
  CHECK(detect_shape(klein).kind == ShapeKind::Klein);
  auto bs = detect_shape(loop(1, 5));
  CHECK(bs.kind == ShapeKind::BS1n);
  CHECK(bs.n == 5);
  CHECK(detect_shape(loop(-3, 1)).n == -3);
  CHECK(detect_shape(loop(2, 3)).kind == ShapeKind::NonSolvable);
  CHECK(detect_shape(unit_loops).kind == ShapeKind::NonSolvable);
  CHECK_FALSE(detect_shape(loop(2, 3)).solvable());
  CHECK(detect_shape(klein).elementary());
}

TEST_CASE("abelianization matches shapes") {
  CHECK(abelian_invariants(klein) == ints(derived()["abelianization_segment_2_2"]));
  CHECK(abelian_invariants(loop(1, -1)) == ints(derived()["abelianization_loop_1_m1"]));
  CHECK(abelian_invariants(unit_loops) == ints(derived()["abelianization_loops_1_1_1_1"]));

  Rng rng(37);
  int solvable = 0;
  for (int i = 0; i < 3000; ++i) {
    auto g = random_graph(rng);
    auto shape = detect_shape(g);
    auto inv = abelian_invariants(g);
    switch (shape.kind) {
      case ShapeKind::Cyclic: CHECK(inv == std::vector<Integer>{0}); break;
      case ShapeKind::ZxZ: CHECK(inv == std::vector<Integer>{0, 0}); break;
      case ShapeKind::Klein: CHECK(inv == std::vector<Integer>{2, 0}); break;
      case ShapeKind::BS1n: {
        const Integer torsion = abs_value(Integer(shape.n - 1));
        CHECK(inv == (torsion == 1 ? std::vector<Integer>{0} : std::vector<Integer>{torsion, 0}));
        break;
      }
      case ShapeKind::NonSolvable: continue;
    }
    ++solvable;
  }
  CHECK(solvable > 50);
}

TEST_CASE("residually rho") {
  auto check = [](const LabeledGraph& g, std::string_view rho) {
    return check_residually_rho(g, PrimeSet::parse(rho)).holds;
  };
  CHECK(check(loop(1, 2), "7") == derived()["bs_1_2_rho_7"].get<bool>());
  CHECK(check(loop(1, 2), "2,3,7") == derived()["bs_1_2_rho_2_3_7"].get<bool>());
  CHECK(check(loop(1, 2), "all"));
  CHECK(check(loop(1, -1), "2"));
  CHECK_FALSE(check(loop(1, -1), "3"));
  CHECK(check(loop(4, 4), "2"));
  CHECK_FALSE(check(loop(6, 6), "2"));
  CHECK(check(loop(3, -3), "2,3"));
  CHECK_FALSE(check(loop(3, -3), "3"));
  CHECK_FALSE(check(loop(2, 3), "all"));

  auto v = check_residually_rho(loop(1, 2), PrimeSet::parse("2,3"));
  CHECK(v.holds);
  CHECK(*v.witness.prime == 3);
  CHECK(*v.witness.order == 2);
  CHECK(v.trace.front().citation == "Theorem 1(4)");

  auto w = check_residually_rho(loops_9_3, PrimeSet::parse("3"));
  CHECK_FALSE(w.holds);
  CHECK(w.trace.front().citation == "Theorem 3(2)");
}

TEST_CASE("residually finite") {
  CHECK(check_residually_finite(loop(2, 4)).holds == derived()["rf_loop_2_4"].get<bool>());
  CHECK(check_residually_finite(loop(2, -2)).holds == derived()["rf_loop_2_m2"].get<bool>());
  CHECK(check_residually_finite(loop(1, 7)).holds);
  auto v = check_residually_finite(loop(2, 3));
  CHECK_FALSE(v.holds);
  CHECK(*v.witness.modulus == gbs::testing::rat("3/2"));
}

TEST_CASE("residually nilpotent") {
  CHECK(check_residually_nilpotent(loops_9_3).holds == derived()["rn_loops_9_9_3_m3"].get<bool>());
  auto two = make_graph({"v"}, {{"a", "v", "v", 2, 2}, {"b", "v", "v", 4, -4}});
  CHECK(check_residually_nilpotent(two).holds == derived()["rn_loops_2_2_4_m4"].get<bool>());

  auto v = check_residually_nilpotent(loops_9_3);
  REQUIRE(v.witness.elliptic);
  CHECK(v.witness.elliptic->cause == FailureCause::NegativeLoop);
  CHECK(loops_9_3.edge(*v.witness.edge).id == "b");

  CHECK_FALSE(check_residually_nilpotent(loop(1, 2)).holds);
  CHECK(check_residually_nilpotent(loop(1, -2)).holds);
  CHECK(check_residually_nilpotent(loop(5, -5)).holds);
  // 6 is not a prime power
  auto six = check_residually_nilpotent(loop(6, 6));
  CHECK_FALSE(six.holds);
  CHECK(six.trace.front().citation == "Theorem 5(1)");
  CHECK(six.witness.primes == std::vector<Integer>{2, 3});
  CHECK_FALSE(check_residually_nilpotent(loop(6, -6)).holds);
}

TEST_CASE("residually free") {
  auto f = check_residually_free(unit_loops);
  CHECK(f.residually_free.holds);
  CHECK(f.torsion_free_nilpotent.holds);
  CHECK_FALSE(check_residually_free(klein).residually_free.holds);
  CHECK(check_residually_free(loop(1, 1)).residually_free.holds);
  CHECK(check_residually_free(make_graph({"v"}, {})).residually_free.holds);
  CHECK_FALSE(check_residually_free(loop(1, 3)).residually_free.holds);
  CHECK_FALSE(check_residually_free(loop(3, 3)).residually_free.holds);
  // unit labels with a sign-reversing letter
  CHECK_FALSE(check_residually_free(make_graph({"v"}, {{"a", "v", "v", 1, 1}, {"b", "v", "v", 1, -1}}))
                  .residually_free.holds);
}

TEST_CASE("full reports") {
  auto r = classify_all(loop(2, 3), PrimeSet::parse("2,3"));
  REQUIRE(r.verdicts.size() == 6);
  for (const auto& v : r.verdicts) {
    CHECK(v.holds == (v.property == Property::ResiduallyTorsionFreeSolvable));
    CHECK_FALSE(v.trace.empty());
  }
  CHECK(classify_all(loop(2, 3)).verdicts.size() == 5);

  auto k = classify_all(klein);
  CHECK(k.analysis.shape.kind == ShapeKind::Klein);
  CHECK(holds(k, Property::ResiduallyNilpotent));
  CHECK_FALSE(holds(k, Property::ResiduallyFree));
  CHECK_FALSE(k.analysis.image);

  auto u = classify_all(unit_loops);
  CHECK(holds(u, Property::ResiduallyFree));
  CHECK_THROWS_AS(u.verdict(Property::ResiduallyRho), Error);
}

TEST_CASE("implications between verdicts") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    auto r = classify_all(random_graph(rng), PrimeSet::all());
    const bool rn = holds(r, Property::ResiduallyNilpotent);
    const bool rf = holds(r, Property::ResiduallyFinite);
    const bool free = holds(r, Property::ResiduallyFree);
    CHECK(holds(r, Property::ResiduallyRho) == rf);
    CHECK(holds(r, Property::ResiduallyTorsionFreeNilpotent) == free);
    if (free) CHECK(rn);
    if (rn) CHECK(rf);
    CHECK(holds(r, Property::ResiduallyTorsionFreeSolvable));
  }
}
