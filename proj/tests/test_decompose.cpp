#include "oracles.hpp"

#include "rowmotion/decompose.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/io.hpp"
#include "rowmotion/statistics.hpp"

#include <doctest.h>

#include <random>

using namespace rowmotion;

namespace {

std::vector<oracle::Mask> masks(const IdealSpace& S) {
  std::vector<oracle::Mask> J;
  for (const auto& I : S.ideals()) J.push_back(oracle::to_mask(I));
  return J;
}

std::vector<Rational> to_std(const Vector<Rational>& v) { return {v.data(), v.data() + v.size()}; }

oracle::Table columns(const IdealSpace& S, bool antichain) {
  oracle::Table g;
  for (const auto& I : S.ideals()) {
    std::vector<Rational> row(S.poset().size(), Rational(0));
    const ElementSet chosen = antichain ? maximal_elements(S.poset(), I) : I;
    chosen.for_each([&](int p) { row[p] = 1; });
    g.push_back(row);
  }
  return g;
}

// c + sum_p coeffs[p] T_p with small random coefficients.
std::pair<Vector<Rational>, Decomposition<Rational>> random_member(const IdealSpace& S, std::mt19937_64& rng) {
  const int n = S.poset().size();
  Decomposition<Rational> d{random_rational(rng, 9), Vector<Rational>(n), false};
  Vector<Rational> f = Vector<Rational>::Constant(static_cast<Eigen::Index>(S.size()), d.constant);
  for (int p = 0; p < n; ++p) {
    d.coeffs(p) = random_rational(rng, 9);
    f += d.coeffs(p) * t_signed(S, p).values;
  }
  return {f, d};
}

std::vector<Poset> small() {
  return {rectangle(2, 2), rectangle(2, 3), shifted_staircase(2), shifted_staircase(3), root_poset_A(2),
          root_poset_A(3), root_poset_B(2), double_tailed_diamond(3), chain_of_vs(2), trapezoid(2, 3)};
}

}  // namespace

TEST_CASE("certificates on [2]x[2]") {
  IdealSpace S(rectangle(2, 2));
  const Poset& P = S.poset();
  auto at = [&](int i, int j) { return *P.at(i, j); };
  auto d = decompose(S, named_statistic(S, {NamedKind::ideal_card}));
  REQUIRE(d);
  CHECK(d->verified);
  CHECK(d->constant == 2);
  CHECK(d->coeffs(at(1, 1)) == -2);
  CHECK(d->coeffs(at(1, 2)) == Rational(-3, 2));
  CHECK(d->coeffs(at(2, 1)) == Rational(-3, 2));
  CHECK(d->coeffs(at(2, 2)) == -2);
  auto e = decompose(S, named_statistic(S, {NamedKind::antichain_card}));
  REQUIRE(e);
  CHECK(e->constant == 1);
  CHECK(e->coeffs(at(1, 1)) == -1);
  CHECK(e->coeffs(at(1, 2)) == Rational(-1, 2));
  CHECK(e->coeffs(at(2, 1)) == Rational(-1, 2));
  CHECK(e->coeffs(at(2, 2)) == 0);
  auto j = certificate_to_json(P, *e);
  CHECK(j["constant"] == "1");
  CHECK(j["coeffs"]["(1,2)"] == "-1/2");
  CHECK(j["verified"] == true);
}

TEST_CASE("antichain certificate on rectangles") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      IdealSpace S(rectangle(a, b));
      auto d = decompose(S, named_statistic(S, {NamedKind::antichain_card}));
      REQUIRE(d);
      CHECK(d->constant == Rational(a * b, a + b));
      for (int p = 0; p < S.poset().size(); ++p) {
        const Coord c = S.poset().coord(p);
        CHECK(d->coeffs(p) == Rational(a * b - a * (b + 1 - c.j) - b * (a + 1 - c.i), a + b));
      }
    }
}

TEST_CASE("membership agrees with the rank oracle") {
  std::mt19937_64 rng(5);
  for (const auto& P : small()) {
    IdealSpace S(P);
    auto J = masks(S);
    for (int trial = 0; trial < 6; ++trial) {
      Vector<Rational> f(static_cast<Eigen::Index>(S.size()));
      for (auto& x : f) x = std::uniform_int_distribution<int>(0, 1)(rng);
      CHECK(decompose(S, f).has_value() == oracle::in_span(P, J, to_std(f)));
    }
    for (const char* expr : {"ideal_card", "antichain_card", "rankalt"}) {
      if (!P.is_ranked() && std::string(expr) == "rankalt") continue;
      auto f = parse_statistic(S, expr);
      CHECK(decompose(S, f).has_value() == oracle::in_span(P, J, to_std(f.values)));
    }
  }
}

TEST_CASE("certificates are unique") {
  std::mt19937_64 rng(17);
  for (const auto& P : small()) {
    IdealSpace S(P);
    for (int trial = 0; trial < 3; ++trial) {
      auto [f, want] = random_member(S, rng);
      auto got = decompose(S, f);
      REQUIRE(got);
      CHECK(got->constant == want.constant);
      CHECK(got->coeffs == want.coeffs);
    }
  }
}

TEST_CASE("negative cases") {
  for (const Poset& P : {root_poset_from_cartan(cartan_matrix('D', 4)), trapezoid(2, 3), chain_of_vs(2)}) {
    IdealSpace S(P);
    CHECK_FALSE(decompose(S, named_statistic(S, {NamedKind::antichain_card})));
  }
  for (int a = 2; a <= 3; ++a)
    for (int b = 2; b <= 3; ++b) {
      IdealSpace S(rectangle(a, b));
      CHECK_FALSE(q_decompose(S, named_statistic(S, {NamedKind::ideal_card}).values));
    }
}

TEST_CASE("q-certificates") {
  const Polynomial q = Polynomial::q();
  IdealSpace S(rectangle(2, 3));
  auto d = q_decompose(S, named_statistic(S, {NamedKind::antichain_card}).values);
  REQUIRE(d);
  CHECK(d->verified);
  CHECK(d->constant == RationalFunction(q_number(2) * q_number(3), q_number(5)));
  CHECK_NOTHROW(check_no_nonnegative_poles(*d));
  auto classical = decompose(S, named_statistic(S, {NamedKind::antichain_card}));
  REQUIRE(classical);
  CHECK(specialize(*d, Rational(1)).constant == classical->constant);
  CHECK(specialize(*d, Rational(1)).coeffs == classical->coeffs);

  IdealSpace T(shifted_staircase(3));
  auto e = q_decompose(T, named_statistic(T, {NamedKind::diag_antichain}).values);
  REQUIRE(e);
  CHECK(e->constant == RationalFunction(Polynomial(1), q + 1));

  Decomposition<RationalFunction> bad{RationalFunction(Polynomial(1), q - 1), Vector<RationalFunction>(0), true};
  CHECK_THROWS_AS(check_no_nonnegative_poles(bad), std::logic_error);
  CHECK_THROWS_AS(specialize(bad, Rational(1)), std::domain_error);
}

TEST_CASE("independence") {
  CHECK(verify_independence(IdealSpace(rectangle(2, 2)), Rational(1)));
  CHECK(verify_independence(IdealSpace(antichain_poset(2)), Rational(1)));
  for (const auto& P : small())
    for (const Rational& qv : {Rational(0), Rational(1, 2), Rational(1), Rational(2)})
      CHECK(verify_independence(IdealSpace(P), qv));
  CHECK_THROWS_AS(verify_independence(IdealSpace(chain(2)), Rational(-1)), std::invalid_argument);
  // On a chain the n+1 statistics span every function on the n+1 ideals.
  std::mt19937_64 rng(2);
  IdealSpace C(chain(5));
  Vector<Rational> f(6);
  for (auto& x : f) x = random_rational(rng);
  CHECK(decompose(C, f));
  CHECK(toggle_matrix(C).rows() == 6);
}

TEST_CASE("space dimensions agree with the sampled oracle") {
  for (const auto& P : small()) {
    if (P.size() > 6) continue;
    IdealSpace S(P);
    auto J = masks(S);
    SpaceDims d = toggleability_space_dims(S);
    CHECK(d.dim_A == oracle::constant_subspace_dim(P, J, columns(S, true), {Rational(1)}));
    CHECK(d.dim_I == oracle::constant_subspace_dim(P, J, columns(S, false), {Rational(1)}));
    CHECK(d.dim_A_q == oracle::q_constant_subspace_dim(P, J, columns(S, true)));
    CHECK(d.dim_I_q == oracle::q_constant_subspace_dim(P, J, columns(S, false)));
  }
  SpaceDims one = toggleability_space_dims(IdealSpace(chain(1)));
  CHECK(one.dim_A == 1);
  CHECK(one.dim_I == 1);
}

TEST_CASE("antichain span") {
  for (const auto& P : small()) {
    IdealSpace S(P);
    auto orbits = permutation_cycles(S.permutation(ideal_action(P, "rowmotion")));
    CHECK(antichain_span_dim(S) == static_cast<int>(S.size() - orbits.size()));
  }
  CHECK_THROWS_AS(antichain_span_dim(IdealSpace(rectangle(3, 3)), 10), ResourceError);
}

TEST_CASE("color refinements decompose") {
  for (int n = 2; n <= 5; ++n) {
    IdealSpace S(shifted_staircase(n));
    Rational total = 0;
    for (int c = 0; c <= n; ++c) {
      auto d = decompose(S, named_statistic(S, {NamedKind::color_class, c}));
      REQUIRE(d);
      total += d->constant;
    }
    CHECK(total == Rational(n * (n + 1), 4));
  }
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      IdealSpace S(rectangle(a, b));
      for (int k = 1 - a; k < b; ++k) CHECK(decompose(S, named_statistic(S, {NamedKind::color_class, k})));
    }
}
