#include "oracles.hpp"

#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"

#include <doctest.h>

using namespace rowmotion;

TEST_CASE("family sizes") {
  CHECK(rectangle(3, 4).size() == 12);
  CHECK(shifted_staircase(4).size() == 10);
  CHECK(root_poset_A(4).size() == 10);
  CHECK(root_poset_B(3).size() == 9);
  CHECK(double_tailed_diamond(4).size() == 8);
  CHECK(minuscule_E6().size() == 16);
  CHECK(minuscule_E7().size() == 27);
  CHECK(chain_of_vs(3).size() == 9);
  CHECK(trapezoid(2, 3).size() > 0);
}

TEST_CASE("ideal counts of minuscule posets") {
  CHECK(IdealSpace(shifted_staircase(3)).size() == 8);
  CHECK(IdealSpace(double_tailed_diamond(4)).size() == 10);
  CHECK(IdealSpace(minuscule_E6()).size() == 27);
  CHECK(IdealSpace(minuscule_E7()).size() == 56);
  // Catalan numbers for type A, central binomials for type B.
  CHECK(IdealSpace(root_poset_A(3)).size() == 14);
  CHECK(IdealSpace(root_poset_A(4)).size() == 42);
  CHECK(IdealSpace(root_poset_B(2)).size() == 6);
  CHECK(IdealSpace(root_poset_B(3)).size() == 20);
}

TEST_CASE("root posets from Cartan data") {
  for (int n = 1; n <= 5; ++n)
    CHECK(are_isomorphic(root_poset_from_cartan(cartan_matrix('A', n)), root_poset_A(n)));
  for (int n = 2; n <= 4; ++n)
    CHECK(are_isomorphic(root_poset_from_cartan(cartan_matrix('B', n)), root_poset_B(n)));
  CHECK(are_isomorphic(root_layer_from_cartan(cartan_matrix('E', 6), 0), minuscule_E6()));
  CHECK(are_isomorphic(root_layer_from_cartan(cartan_matrix('E', 7), 6), minuscule_E7()));
  CHECK(are_isomorphic(root_layer_from_cartan(cartan_matrix('A', 5), 2), rectangle(3, 3)));
  CHECK(are_isomorphic(root_layer_from_cartan(cartan_matrix('D', 5), 0), double_tailed_diamond(4)));
  CHECK(root_poset_from_cartan(cartan_matrix('E', 8)).size() == 120);
  CHECK_THROWS_AS(cartan_matrix('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(root_poset_from_cartan({{2, -1}, {-3, 2}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("minuscule posets are graded and self-dual") {
  for (const auto& P : all_minuscule(27)) {
    CHECK(is_graded(P));
    CHECK(are_isomorphic(P, dual(P)));
  }
}

TEST_CASE("all_minuscule lists one poset per isomorphism class") {
  auto M = all_minuscule(16);
  for (std::size_t x = 0; x < M.size(); ++x)
    for (std::size_t y = x + 1; y < M.size(); ++y) CHECK_FALSE(are_isomorphic(M[x], M[y]));
  // 1x1, 1x2, ..., rectangles of size <= 16, staircases 3..5, diamonds 4..8, E6.
  int rects = 0;
  for (int a = 1; a <= 16; ++a)
    for (int b = a; a * b <= 16; ++b) ++rects;
  CHECK(M.size() == static_cast<std::size_t>(rects + 3 + 5 + 1));
}

TEST_CASE("foldings commute with rowmotion") {
  for (int n = 1; n <= 4; ++n) {
    Folding F = staircase_folding(n);
    for (const auto& I : enumerate_ideals(F.quotient))
      CHECK(F.unfold(rowmotion::rowmotion(F.quotient, I)) == rowmotion::rowmotion(F.doubled, F.unfold(I)));
  }
  for (int n = 2; n <= 3; ++n) {
    Folding F = rootB_folding(n);
    for (const auto& I : enumerate_ideals(F.quotient))
      CHECK(F.unfold(rowmotion::rowmotion(F.quotient, I)) == rowmotion::rowmotion(F.doubled, F.unfold(I)));
  }
}

TEST_CASE("cover bounds") {
  CHECK(has_at_most_two_covers(rectangle(3, 3)));
  CHECK(has_at_most_two_covers(root_poset_A(4)));
  CHECK(has_at_most_two_covers(minuscule_E7()));
  CHECK_FALSE(has_at_most_two_covers(Poset(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("parse_family") {
  CHECK(parse_family("rect:2,3").size() == 6);
  CHECK(*parse_family("rect:2,3").name() == "rect:2,3");
  CHECK(parse_family("sstair:3").size() == 6);
  CHECK(parse_family("rootA:3").size() == 6);
  CHECK(parse_family("rootB:2").size() == 4);
  CHECK(parse_family("dtd:3").size() == 6);
  CHECK(parse_family("E6").size() == 16);
  CHECK(parse_family("rootD:4").size() == 12);
  CHECK(parse_family("chain:5").size() == 5);
  for (const char* bad : {"rect:2", "rect:a,b", "rect:0,2", "foo:1", "sstair:", "E9", "file:/nonexistent.json"})
    CHECK_THROWS_AS(parse_family(bad), std::invalid_argument);
}
