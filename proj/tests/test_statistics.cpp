#include "rowmotion/decompose.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/statistics.hpp"

#include <doctest.h>

using namespace rowmotion;

namespace {

Vector<Rational> vec(std::initializer_list<int> xs) {
  Vector<Rational> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (int x : xs) v(k++) = x;
  return v;
}

bool same(const Statistic& f, const Statistic& g) { return f.values == g.values; }

bool constant(const Statistic& f, const Rational& c) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] != c) return false;
  return true;
}

}  // namespace

TEST_CASE("toggleability table on [2]x[2]") {
  IdealSpace S(rectangle(2, 2));
  const Poset& P = S.poset();
  // Rows in canonical ideal order; columns (1,1), (1,2), (2,1), (2,2).
  const int table[6][4] = {{1, 0, 0, 0}, {-1, 1, 1, 0}, {0, -1, 1, 0}, {0, 1, -1, 0}, {0, -1, -1, 1}, {0, 0, 0, -1}};
  const int cells[4][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (int c = 0; c < 4; ++c) {
    Statistic t = t_signed(S, *P.at(cells[c][0], cells[c][1]));
    for (int k = 0; k < 6; ++k) CHECK(t[k] == table[k][c]);
  }
  CHECK(named_statistic(S, {NamedKind::ideal_card}).values == vec({0, 1, 2, 2, 3, 4}));
  CHECK(named_statistic(S, {NamedKind::antichain_card}).values == vec({0, 1, 1, 1, 2, 1}));
}

TEST_CASE("basic toggleability facts") {
  for (const Poset& P : {rectangle(2, 3), shifted_staircase(3), root_poset_A(3)}) {
    IdealSpace S(P);
    const std::size_t full = S.size() - 1;
    Statistic sum = constant_statistic(S, 0);
    for (int p = 0; p < P.size(); ++p) {
      CHECK(t_in(S, p)[full] == 0);
      CHECK(t_out(S, p)[0] == 0);
      CHECK(same(t_signed(S, p), t_in(S, p) - t_out(S, p)));
      sum = sum + indicator_ideal(S, p);
      auto tq = t_q(S, p);
      for (std::size_t k = 0; k < S.size(); ++k) CHECK(tq[k](Rational(1)) == t_signed(S, p)[k]);
    }
    CHECK(same(sum, named_statistic(S, {NamedKind::ideal_card})));
  }
  IdealSpace S(rectangle(2, 2));
  auto tq = t_q(S, 0);
  CHECK(tq[0] == RationalFunction(1));
  CHECK(tq[1] == RationalFunction(-Polynomial::q()));
}

TEST_CASE("q-weighted sums") {
  IdealSpace A2(root_poset_A(2));
  for (int p = 0; p < A2.poset().size(); ++p) {
    RationalFunction total;
    auto tq = t_q(A2, p);
    for (std::size_t k = 0; k < A2.size(); ++k)
      total += RationalFunction(pow(Polynomial::q(), static_cast<unsigned>(A2.poset().size() - A2[k].size()))) * tq[k];
    CHECK(total.is_zero());
  }
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      IdealSpace S(rectangle(a, b));
      Polynomial total;
      for (const auto& I : S.ideals()) total += pow(Polynomial::q(), static_cast<unsigned>(a * b - I.size()));
      CHECK(RationalFunction(total) == q_binomial(a + b, b));
    }
}

TEST_CASE("rectangle rooks") {
  IdealSpace S(rectangle(3, 4));
  CHECK(S.size() == 35);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) {
      CHECK(constant(rook_rect(S, i, j, false), 1));
      auto d = decompose(S, rook_rect(S, i, j, false) - rook_rect(S, i, j, true));
      REQUIRE(d);
      CHECK(d->constant == 0);
    }
  CHECK_THROWS_AS(rook_rect(S, 4, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(rook_sstair(S, 1, 1, false), std::invalid_argument);

  IdealSpace T(rectangle(2, 3));
  Statistic total = constant_statistic(T, 0);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) total = total + rook_rect(T, i, j, true);
  CHECK(same(total, Rational(5) * named_statistic(T, {NamedKind::antichain_card})));
}

TEST_CASE("staircase and root poset rooks") {
  IdealSpace S(shifted_staircase(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) CHECK(constant(rook_sstair(S, i, j, false), 1));

  IdealSpace A(root_poset_A(3));
  Statistic total = constant_statistic(A, 0);
  for (int i = 1; i <= 3; ++i) {
    CHECK(constant(rook_A(A, i, false), 1));
    total = total + rook_A(A, i, true);
  }
  CHECK(same(total, Rational(2) * named_statistic(A, {NamedKind::antichain_card})));
  CHECK_THROWS_AS(rook_A(A, 4, false), std::invalid_argument);

  IdealSpace B(root_poset_B(2));
  for (int i = 1; i <= 2; ++i) {
    CHECK(constant(rook_B(B, i, false), 1));
    CHECK(constant(var_rook_B(B, i, false), 1));
  }
  CHECK(same(Rational(2) * rook_B(B, 2, true) - var_rook_B(B, 2, true),
             Rational(2) * named_statistic(B, {NamedKind::diag_antichain})));
}

TEST_CASE("refinements add up") {
  IdealSpace S(rectangle(3, 4));
  Statistic files = constant_statistic(S, 0), fibers = constant_statistic(S, 0);
  for (int k = -2; k <= 3; ++k) files = files + named_statistic(S, {NamedKind::file, k});
  for (int i = 1; i <= 3; ++i) fibers = fibers + named_statistic(S, {NamedKind::pos_fiber, i});
  CHECK(same(files, named_statistic(S, {NamedKind::ideal_card})));
  CHECK(same(fibers, named_statistic(S, {NamedKind::antichain_card})));
  IdealSpace T(shifted_staircase(3));
  CHECK(same(named_statistic(T, {NamedKind::file, 0}), parse_statistic(T, "ind:1,1 + ind:2,2 + ind:3,3")));
  IdealSpace A(root_poset_A(2));
  CHECK(named_statistic(A, {NamedKind::rank_alternating})[A.size() - 1] == 1);
  CHECK_THROWS_AS(named_statistic(IdealSpace(minuscule_E6()), {NamedKind::file, 0}), std::invalid_argument);
}

TEST_CASE("antichain toggleability") {
  IdealSpace S(root_poset_A(3));
  const Poset& P = S.poset();
  for (int p = 0; p < P.size(); ++p) {
    ElementSet A = ElementSet::single(p);
    CHECK(same(antichain_toggleability(S, A, ToggleKind::in), t_in(S, p)));
    CHECK(same(antichain_toggleability(S, A, ToggleKind::out), t_out(S, p)));
    CHECK(same(antichain_toggleability(S, A, ToggleKind::signed_), t_signed(S, p)));
  }
  CHECK(constant(antichain_toggleability(S, ElementSet(), ToggleKind::in), 1));
  CHECK(constant(antichain_toggleability(S, ElementSet(), ToggleKind::out), 1));
  CHECK(constant(antichain_toggleability(S, ElementSet(), ToggleKind::signed_), 0));
  CHECK_THROWS_AS(antichain_toggleability(S, P.principal_ideal(*P.at(3, 3)), ToggleKind::in), std::invalid_argument);
}

TEST_CASE("statistic parser") {
  IdealSpace S(rectangle(2, 3));
  CHECK(same(parse_statistic(S, "2*file:0 - file:1 - file:-1"),
             Rational(2) * named_statistic(S, {NamedKind::file, 0}) - named_statistic(S, {NamedKind::file, 1}) -
                 named_statistic(S, {NamedKind::file, -1})));
  CHECK(same(parse_statistic(S, "1/2*tout:1,1 + t:3"), Rational(1, 2) * t_out(S, 0) + t_signed(S, 3)));
  CHECK(constant(parse_statistic(S, "one"), 1));
  for (const char* bad : {"", "file", "file:x", "2**one", "tout:9,9", "bogus", "one +", "rookA:1"})
    CHECK_THROWS_AS(parse_statistic(S, bad), std::invalid_argument);
}

TEST_CASE("homomesy on [2]x[2]") {
  IdealSpace S(rectangle(2, 2));
  auto row = S.permutation(ideal_action(S.poset(), "rowmotion"));
  auto ideal = homomesy_check(named_statistic(S, {NamedKind::ideal_card}), row);
  CHECK(ideal.is_homomesic);
  CHECK(ideal.global_average == 2);
  auto anti = homomesy_check(named_statistic(S, {NamedKind::antichain_card}), row);
  CHECK(anti.is_homomesic);
  CHECK(anti.global_average == 1);
  CHECK(homomesy_check(constant_statistic(S, Rational(3, 7)), row).global_average == Rational(3, 7));
  auto corner = homomesy_check(indicator_ideal(S, 0), row);
  CHECK_FALSE(corner.is_homomesic);
  CHECK(corner.orbit_averages.size() == 2);
}
