#include "rowmotion/decompose.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/lifted.hpp"

#include <doctest.h>

#include <random>

using namespace rowmotion;

TEST_CASE("vertex points specialize to rowmotion") {
  for (const Poset& P : {rectangle(2, 3), shifted_staircase(3), root_poset_A(3), chain_of_vs(2)}) {
    for (const auto& I : enumerate_ideals(P)) {
      auto x = vertex_point(P, I);
      CHECK(vertex_ideal(P, x) == I);
      CHECK(vertex_ideal(P, pl_rowmotion(P, x)) == rowmotion::rowmotion(P, I));
    }
  }
  PLPoint half{Vector<Rational>::Constant(2, Rational(1, 2)), 0, 1};
  CHECK_FALSE(vertex_ideal(chain(2), half));
}

TEST_CASE("toggles are involutions") {
  std::mt19937_64 rng(8);
  Poset P = root_poset_A(3);
  auto x = random_pl_point(P, rng, Rational(-1), Rational(3));
  auto y = random_b_point(P, rng, Rational(2), Rational(5, 3));
  for (int p = 0; p < P.size(); ++p) {
    CHECK(pl_toggle(P, p, pl_toggle(P, p, x)) == x);
    CHECK(b_toggle(P, p, b_toggle(P, p, y)) == y);
  }
}

TEST_CASE("birational rowmotion on rectangles") {
  std::mt19937_64 rng(4);
  Poset R = rectangle(2, 2);
  for (int trial = 0; trial < 3; ++trial) {
    auto x = random_b_point(R, rng, random_positive_rational(rng, 7), random_positive_rational(rng, 7));
    auto y = x;
    for (int k = 0; k < 4; ++k) y = b_rowmotion(R, y);
    CHECK(y == x);
    auto orbit = finite_orbit<BPoint>([&](const BPoint& z) { return b_rowmotion(R, z); }, x);
    REQUIRE(orbit);
    // Product of every coordinate over the orbit.
    FactoredValue all;
    for (const auto& z : *orbit)
      for (const auto& v : z.values) all *= FactoredValue{{{v, Rational(1)}}};
    REQUIRE(orbit->size() == 4);
    CHECK(all.value() == pow(x.omega, 8) * pow(x.alpha, 8));
  }
  Poset T = rectangle(2, 3);
  auto x = random_b_point(T, rng, 1, 1);
  auto orbit = finite_orbit<BPoint>([&](const BPoint& z) { return b_rowmotion(T, z); }, x);
  REQUIRE(orbit);
  CHECK(5 % orbit->size() == 0);
}

TEST_CASE("rank-permuted PL rowmotion") {
  std::mt19937_64 rng(9);
  Poset R = rectangle(2, 3);
  auto x = random_pl_point(R, rng);
  CHECK(pl_rowmotion_sigma(R, {0, 1, 2, 3}, x) == pl_rowmotion(R, x));
  CHECK(pl_action(R, "gyration")(x) == pl_rowmotion_sigma(R, gyration_sequence(R), x));
  CHECK_THROWS_AS(pl_action(R, "nope"), std::invalid_argument);
}

TEST_CASE("toggleability orbit laws") {
  std::mt19937_64 rng(12);
  Poset P = shifted_staircase(3);
  auto x = random_pl_point(P, rng, 0, 2);
  auto orbit = finite_orbit(pl_action(P, "rowmotion"), x);
  REQUIRE(orbit);
  for (int p = 0; p < P.size(); ++p) {
    Rational sum = 0;
    for (const auto& y : *orbit) sum += pl_toggleability(ToggleKind::signed_, P, p, y);
    CHECK(sum == 0);
  }
  auto z = random_b_point(P, rng, 3, Rational(1, 2));
  auto borbit = finite_orbit(b_action(P, "gyration"), z);
  REQUIRE(borbit);
  for (int p = 0; p < P.size(); ++p) {
    Rational prod = 1;
    for (const auto& y : *borbit) prod *= b_toggleability(ToggleKind::signed_, P, p, y);
    CHECK(prod == 1);
  }
}

TEST_CASE("lifted certificates are constant") {
  std::mt19937_64 rng(21);
  IdealSpace S(rectangle(2, 3));
  const Poset& P = S.poset();
  auto f = parse_statistic(S, "antichain_card");
  auto d = decompose(S, f);
  REQUIRE(d);
  auto g = lift_certificate(P, *f.form, *d);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational alpha = random_rational(rng, 4);
    auto x = random_pl_point(P, rng, alpha, alpha + random_positive_rational(rng, 4));
    CHECK(evaluate_pl(P, g, x) == d->constant * (x.omega - x.alpha));
    auto y = random_b_point(P, rng, random_positive_rational(rng, 6), random_positive_rational(rng, 6));
    CHECK(evaluate_b(P, g, y).equals_power(y.omega / y.alpha, d->constant));
  }
  auto law = orbit_homomesy_pl(P, lift_statistic(P, *f.form), d->constant, pl_action(P, "rowmotion"),
                               random_pl_point(P, rng));
  CHECK(law.finite);
  CHECK(law.law_holds);
  auto blaw = orbit_homomesy_b(P, lift_statistic(P, *f.form), d->constant, b_action(P, "rowmotion"),
                               random_b_point(P, rng, 2, 7));
  CHECK(blaw.finite);
  CHECK(blaw.law_holds);
}

TEST_CASE("lifting needs at most two covers") {
  Poset claw(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(lift_statistic(claw, ToggleForm::zero(4)), std::invalid_argument);
}

TEST_CASE("factored values") {
  FactoredValue v{{{Rational(4), Rational(1, 2)}, {Rational(3), Rational(2)}}};
  CHECK(v.equals_power(Rational(6), Rational(1)) == false);
  CHECK(v.equals_power(Rational(18), Rational(1)));
  CHECK_FALSE(v.equals_power(Rational(18), Rational(1, 2)));
  CHECK_FALSE(v.value());
  FactoredValue w{{{Rational(2, 3), Rational(-2)}}};
  CHECK(w.value() == Rational(9, 4));
  FactoredValue root2{{{Rational(2), Rational(1, 2)}}};
  CHECK(root2.equals_power(Rational(4), Rational(1, 4)));
  CHECK_FALSE(root2.equals_power(Rational(2), Rational(1, 3)));
}

TEST_CASE("points are validated") {
  Poset P = chain(2);
  CHECK_THROWS_AS(check_point(P, BPoint{Vector<Rational>::Constant(2, Rational(0)), 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_point(P, BPoint{Vector<Rational>::Constant(3, Rational(1)), 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_point(P, PLPoint{Vector<Rational>::Constant(1, Rational(1)), 0, 1}), std::invalid_argument);
  CHECK_NOTHROW(check_point(P, PLPoint{Vector<Rational>::Constant(2, Rational(-5)), 0, 1}));
}
