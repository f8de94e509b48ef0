#pragma once

// Toggles, rowmotion and its rank-permuted variants, antichain rowmotion, and
// orbit decomposition of finite bijections.

#include "rowmotion/poset.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rowmotion {

ElementSet toggle(const Poset& P, int p, const ElementSet& ideal);

// Ideal generated by min(P \ I).
ElementSet rowmotion(const Poset& P, const ElementSet& ideal);

// t_{p1} o ... o t_{pn} for the extension p1..pn (so p_n is toggled first).
// Throws std::invalid_argument for an invalid extension.
ElementSet rowmotion_by_toggles(const Poset& P, const std::vector<int>& extension, const ElementSet& ideal);

// Largest rank, for ranked posets; throws std::invalid_argument otherwise.
int max_rank(const Poset& P);

// Product of the toggles at rank i.
ElementSet rank_toggle(const Poset& P, int rank, const ElementSet& ideal);

// Throws std::invalid_argument unless sigma permutes 0..max_rank(P).
void check_rank_permutation(const Poset& P, const std::vector<int>& sigma);

// tau_{sigma(0)} o ... o tau_{sigma(rk)}: rank sigma(rk) is toggled first.
ElementSet rowmotion_sigma(const Poset& P, const std::vector<int>& sigma, const ElementSet& ideal);

// The sequence (1, 3, 5, ..., 0, 2, 4, ...) over the ranks of P.
std::vector<int> gyration_sequence(const Poset& P);
ElementSet gyration(const Poset& P, const ElementSet& ideal);

// min(P \ ideal generated by A); throws std::invalid_argument if A is not an antichain.
ElementSet antichain_rowmotion(const Poset& P, const ElementSet& antichain);

// A rowmotion-like action on J(P), selected by name: "rowmotion", "gyration",
// or "sigma:<r0>,<r1>,..." (a rank permutation).
std::function<ElementSet(const ElementSet&)> ideal_action(const Poset& P, const std::string& variant);

inline constexpr std::size_t kDefaultOrbitCap = 10'000;

template <class State>
struct Orbit {
  std::vector<State> states;
  std::size_t period() const { return states.size(); }
};

// Forward iteration until the first return to `start`. Throws
// std::logic_error if the iteration re-enters a cycle away from `start`
// (the map is then not injective) and ResourceError past `cap` steps.
template <class State, class Hash = std::hash<State>, class Map>
Orbit<State> orbit(const Map& f, const State& start, std::size_t cap = kDefaultOrbitCap) {
  Orbit<State> o;
  std::unordered_set<State, Hash> seen;
  State s = start;
  while (true) {
    o.states.push_back(s);
    seen.insert(s);
    s = f(s);
    if (s == start) return o;
    if (seen.count(s)) throw std::logic_error("map is not injective: orbit re-enters away from its start");
    if (o.states.size() >= cap) throw ResourceError("orbit exceeded cap of " + std::to_string(cap) + " steps");
  }
}

// Orbits of a bijection on an explicitly listed state space, in order of
// first appearance. Throws std::logic_error if the map leaves the space or the
// orbits fail to partition it.
template <class State, class Hash = std::hash<State>, class Map>
std::vector<Orbit<State>> orbit_partition(const Map& f, const std::vector<State>& space) {
  std::unordered_map<State, bool, Hash> visited;
  for (const auto& s : space) visited.emplace(s, false);
  std::vector<Orbit<State>> out;
  std::size_t total = 0;
  for (const auto& s : space) {
    if (visited.at(s)) continue;
    auto closed = [&](const State& x) {
      State y = f(x);
      if (!visited.count(y)) throw std::logic_error("map is not closed on the state space");
      return y;
    };
    Orbit<State> o = orbit<State, Hash>(closed, s, space.size() + 1);
    for (const auto& t : o.states) {
      auto it = visited.find(t);
      if (it == visited.end()) throw std::logic_error("map is not closed on the state space");
      if (it->second) throw std::logic_error("orbits overlap: map is not a bijection");
      it->second = true;
    }
    total += o.period();
    out.push_back(std::move(o));
  }
  if (total != space.size()) throw std::logic_error("orbits do not partition the state space");
  return out;
}

// Cycles of a permutation of 0..n-1, each starting at its least index, in
// increasing order of that index.
std::vector<std::vector<std::size_t>> permutation_cycles(const std::vector<std::size_t>& perm);

}  // namespace rowmotion
