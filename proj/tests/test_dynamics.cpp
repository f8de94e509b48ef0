#include "oracles.hpp"

#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace rowmotion;

namespace {

ElementSet from_mask(oracle::Mask m) {
  ElementSet s;
  for (int p = 0; p < 64; ++p)
    if (m >> p & 1) s.insert(p);
  return s;
}

std::vector<Poset> test_posets() {
  return {rectangle(2, 3), rectangle(3, 3), shifted_staircase(3), root_poset_A(4), root_poset_B(3),
          double_tailed_diamond(4), trapezoid(2, 3), chain_of_vs(2), antichain_poset(3), minuscule_E6()};
}

// A uniformly random linear extension is not needed; any shuffled topological
// order reachable by greedy random choice suffices.
std::vector<int> random_extension(const Poset& P, std::mt19937_64& rng) {
  std::vector<int> indeg(P.size(), 0), out;
  for (auto [lo, hi] : P.covers()) ++indeg[hi];
  std::vector<int> ready;
  for (int p = 0; p < P.size(); ++p)
    if (!indeg[p]) ready.push_back(p);
  while (!ready.empty()) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    int p = ready[k];
    ready.erase(ready.begin() + static_cast<long>(k));
    out.push_back(p);
    for (int u : P.upper_covers(p))
      if (!--indeg[u]) ready.push_back(u);
  }
  return out;
}

std::map<std::size_t, int> orbit_type(const std::vector<std::size_t>& perm) {
  std::map<std::size_t, int> t;
  for (const auto& c : permutation_cycles(perm)) ++t[c.size()];
  return t;
}

}  // namespace

TEST_CASE("rowmotion agrees with the oracle") {
  for (const auto& P : test_posets())
    for (oracle::Mask I : oracle::ideals(P))
      CHECK(oracle::to_mask(rowmotion::rowmotion(P, from_mask(I))) == oracle::rowmotion(P, I));
}

TEST_CASE("toggles") {
  Poset R = rectangle(2, 2);
  ElementSet none;
  CHECK(toggle(R, 0, none) == ElementSet::single(0));
  CHECK(toggle(R, 3, none) == none);
  CHECK(toggle(R, 0, ElementSet::single(0)) == none);
  for (const auto& P : test_posets())
    for (const auto& I : enumerate_ideals(P))
      for (int p = 0; p < P.size(); ++p) {
        ElementSet t = toggle(P, p, I);
        CHECK(is_order_ideal(P, t));
        CHECK(toggle(P, p, t) == I);
      }
}

TEST_CASE("rowmotion is the toggle product along any linear extension") {
  std::mt19937_64 rng(11);
  for (const auto& P : test_posets()) {
    auto J = enumerate_ideals(P);
    for (int trial = 0; trial < 5; ++trial) {
      auto ext = random_extension(P, rng);
      REQUIRE(is_linear_extension(P, ext));
      for (const auto& I : J) CHECK(rowmotion_by_toggles(P, ext, I) == rowmotion::rowmotion(P, I));
    }
  }
  CHECK_THROWS_AS(rowmotion_by_toggles(chain(2), {1, 0}, ElementSet()), std::invalid_argument);
}

TEST_CASE("rank toggles") {
  Poset R = rectangle(3, 4);
  CHECK(max_rank(R) == 5);
  std::vector<int> descending{0, 1, 2, 3, 4, 5};
  for (const auto& I : enumerate_ideals(R)) CHECK(rowmotion_sigma(R, descending, I) == rowmotion::rowmotion(R, I));
  CHECK(gyration_sequence(R) == std::vector<int>{1, 3, 5, 0, 2, 4});
  CHECK_THROWS_AS(check_rank_permutation(R, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(check_rank_permutation(R, {0, 0, 1, 2, 3, 4}), std::invalid_argument);
  Poset pentagon(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  CHECK_FALSE(pentagon.is_ranked());
  CHECK_THROWS_AS(max_rank(pentagon), std::invalid_argument);
}

TEST_CASE("orbit structure") {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 5; ++b) {
      IdealSpace S(rectangle(a, b));
      auto row = S.permutation(ideal_action(S.poset(), "rowmotion"));
      for (const auto& c : permutation_cycles(row)) CHECK((a + b) % c.size() == 0);
      // Every rank-permuted variant is conjugate to rowmotion.
      CHECK(orbit_type(S.permutation(ideal_action(S.poset(), "gyration"))) == orbit_type(row));
    }
  IdealSpace S(rectangle(2, 2));
  auto cycles = permutation_cycles(S.permutation(ideal_action(S.poset(), "rowmotion")));
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].size() == 4);
  CHECK(cycles[1].size() == 2);
  CHECK(orbit_type(S.permutation(ideal_action(S.poset(), "sigma:2,0,1"))) == orbit_type(S.permutation(ideal_action(S.poset(), "rowmotion"))));
  CHECK_THROWS_AS(ideal_action(S.poset(), "sigma:0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(ideal_action(S.poset(), "spin"), std::invalid_argument);
}

TEST_CASE("antichain rowmotion tracks maximal elements") {
  for (const auto& P : test_posets())
    for (const auto& I : enumerate_ideals(P))
      CHECK(antichain_rowmotion(P, maximal_elements(P, I)) == maximal_elements(P, rowmotion::rowmotion(P, I)));
  ElementSet chainpair;
  chainpair.insert(0);
  chainpair.insert(1);
  CHECK_THROWS_AS(antichain_rowmotion(chain(2), chainpair), std::invalid_argument);
}

TEST_CASE("orbit helpers") {
  auto succ = [](int x) { return (x + 1) % 5; };
  CHECK(orbit<int>(succ, 2).period() == 5);
  CHECK_THROWS_AS(orbit<int>(succ, 0, 3), ResourceError);
  auto collapse = [](int x) { return x == 0 ? 1 : 2; };
  CHECK_THROWS_AS(orbit<int>(collapse, 0), std::logic_error);
  CHECK(permutation_cycles({1, 0, 2}) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(orbit_partition<int>(succ, std::vector<int>{0, 1, 2, 3, 4}).size() == 1);
  CHECK_THROWS_AS(orbit_partition<int>(succ, std::vector<int>{0, 1, 2}), std::logic_error);
}
