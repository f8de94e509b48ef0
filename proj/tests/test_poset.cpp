#include "oracles.hpp"

#include "rowmotion/families.hpp"
#include "rowmotion/io.hpp"
#include "rowmotion/poset.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rowmotion;

namespace {

std::vector<Poset> small_posets() {
  return {rectangle(2, 2),           rectangle(2, 3),     rectangle(3, 3), shifted_staircase(3),
          root_poset_A(3),           root_poset_B(2),     chain(4),        antichain_poset(3),
          double_tailed_diamond(3),  trapezoid(2, 3),     chain_of_vs(2),  minuscule_E6()};
}

}  // namespace

TEST_CASE("leq on small examples") {
  Poset R = rectangle(2, 2);
  CHECK(leq(R, *R.at(1, 1), *R.at(2, 2)));
  CHECK_FALSE(leq(R, *R.at(2, 2), *R.at(1, 1)));
  Poset A = root_poset_A(2);
  CHECK_FALSE(leq(A, *A.at(1, 2), *A.at(2, 1)));
  CHECK_FALSE(leq(A, *A.at(2, 1), *A.at(1, 2)));
  for (int p = 0; p < A.size(); ++p) CHECK(leq(A, p, p));
  CHECK_THROWS(leq(A, 0, 9));
}

TEST_CASE("leq agrees with the closure oracle") {
  for (const auto& P : small_posets()) {
    auto le = oracle::order(P);
    for (int x = 0; x < P.size(); ++x)
      for (int y = 0; y < P.size(); ++y) CHECK(leq(P, x, y) == le[x][y]);
  }
}

TEST_CASE("cycles and bad indices are rejected") {
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(ElementSet::kMaxElements + 1, {}), std::invalid_argument);
}

TEST_CASE("relations reduce to covers") {
  Poset P(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(P.covers().size() == 2);
}

TEST_CASE("linear extensions") {
  CHECK(linear_extension(chain(3)) == std::vector<int>{0, 1, 2});
  CHECK(linear_extension(antichain_poset(2)) == std::vector<int>{0, 1});
  Poset R = rectangle(2, 2);
  CHECK(linear_extension(R) == std::vector<int>{0, 1, 2, 3});
  CHECK(is_linear_extension(R, {0, 2, 1, 3}));
  CHECK_FALSE(is_linear_extension(R, {1, 0, 2, 3}));
  for (const auto& P : small_posets()) CHECK(is_linear_extension(P, linear_extension(P)));
}

TEST_CASE("minimal complement and maximal elements on [2]x[2]") {
  Poset R = rectangle(2, 2);
  const int a = *R.at(1, 1), b = *R.at(1, 2), c = *R.at(2, 1), d = *R.at(2, 2);
  ElementSet none, all = R.all(), bottom = ElementSet::single(a);
  CHECK(minimal_complement(R, none) == bottom);
  CHECK(minimal_complement(R, all).empty());
  ElementSet bc;
  bc.insert(b);
  bc.insert(c);
  CHECK(minimal_complement(R, bottom) == bc);
  CHECK(maximal_elements(R, all) == ElementSet::single(d));
  CHECK(maximal_elements(R, none).empty());
  ElementSet abc = bc;
  abc.insert(a);
  CHECK(maximal_elements(R, abc) == bc);
  CHECK(ideal_generated_by(R, ElementSet::single(d)) == all);
  CHECK_THROWS_AS(ideal_generated_by(R, abc), std::invalid_argument);
}

TEST_CASE("enumerate_ideals matches the subset scan") {
  for (const auto& P : small_posets()) {
    if (P.size() > 20) continue;
    auto J = enumerate_ideals(P);
    std::set<oracle::Mask> got;
    for (const auto& I : J) got.insert(oracle::to_mask(I));
    auto want = oracle::ideals(P);
    CHECK(got.size() == J.size());
    CHECK(got == std::set<oracle::Mask>(want.begin(), want.end()));
    CHECK(std::is_sorted(J.begin(), J.end(), [](const ElementSet& x, const ElementSet& y) { return canonical_less(x, y); }));
    for (const auto& I : J) CHECK(ideal_generated_by(P, maximal_elements(P, I)) == I);
  }
}

TEST_CASE("ideal counts") {
  CHECK(enumerate_ideals(Poset(0, {})).size() == 1);
  CHECK(enumerate_ideals(rectangle(2, 2)).size() == 6);
  CHECK(enumerate_ideals(root_poset_A(2)).size() == 5);
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      CHECK(enumerate_ideals(rectangle(a, b)).size() == static_cast<std::size_t>(oracle::binomial(a + b, b)));
  CHECK_THROWS_AS(enumerate_ideals(rectangle(4, 4), 10), ResourceError);
}

TEST_CASE("canonical order on [2]x[2]") {
  IdealSpace S(rectangle(2, 2));
  std::vector<std::string> got;
  for (const auto& I : S.ideals()) got.push_back(I.str());
  CHECK(got == std::vector<std::string>{"{}", "{0}", "{0,1}", "{0,2}", "{0,1,2}", "{0,1,2,3}"});
  CHECK(S.index_of(S[3]) == 3);
  CHECK_THROWS_AS(S.index_of(ElementSet::single(3)), std::out_of_range);
}

TEST_CASE("duality, grading and isomorphism") {
  for (const auto& P : small_posets()) CHECK(are_isomorphic(dual(dual(P)), P));
  CHECK(are_isomorphic(dual(chain(3)), chain(3)));
  CHECK(are_isomorphic(dual(rectangle(2, 3)), rectangle(2, 3)));
  CHECK_FALSE(are_isomorphic(rectangle(2, 3), shifted_staircase(3)));
  CHECK(is_graded(rectangle(3, 4)));
  CHECK(*rank_of(rectangle(3, 4)) == 5);
  CHECK(*rank_of(chain_of_vs(1)) == 1);
  CHECK(*rank_of(root_poset_A(3)) == 2);
}

TEST_CASE("rank function satisfies the cover law") {
  for (const auto& P : small_posets()) {
    if (!P.is_ranked()) continue;
    for (auto [lo, hi] : P.covers()) CHECK(P.rank(hi) == P.rank(lo) + 1);
  }
}

TEST_CASE("poset JSON round trip") {
  for (const auto& P : small_posets()) {
    Poset Q = poset_from_json(poset_to_json(P));
    CHECK(Q.size() == P.size());
    CHECK(Q.covers() == P.covers());
    CHECK(Q.has_coords() == P.has_coords());
  }
  CHECK_THROWS(poset_from_json(nlohmann::json{{"n", 2}, {"covers", {{0, 5}}}}));
}
