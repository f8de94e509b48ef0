#pragma once

// q-rowmotion on labelings by s flavors of 0 and r flavors of 1, where the
// elements labeled 0 form an order ideal.

#include "rowmotion/polynomial.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/statistics.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rowmotion {

// Flavor symbols 0..s-1 are the zeros 0_1..0_s, and s..s+r-1 the ones 1_1..1_r.
class FlavorAlphabet {
 public:
  // theta(k) = k+1 mod (r+s): 0_1 -> ... -> 0_s -> 1_1 -> ... -> 1_r -> 0_1.
  FlavorAlphabet(int r, int s);
  // Throws std::invalid_argument unless theta is a single (r+s)-cycle.
  FlavorAlphabet(int r, int s, std::vector<int> theta);
  static FlavorAlphabet random(int r, int s, std::mt19937_64& rng);

  int r() const { return r_; }
  int s() const { return s_; }
  int size() const { return r_ + s_; }
  Rational q() const { return Rational(r_) / Rational(s_); }
  bool is_zero(int symbol) const { return symbol < s_; }
  const std::vector<int>& theta() const { return theta_; }

  // Per-element cycles; elements without one use the global theta.
  void set_local_theta(int p, std::vector<int> theta);
  bool has_local_theta() const { return !local_.empty(); }
  int next(int p, int symbol) const;

  std::string symbol_name(int symbol) const;
  std::string str() const;

 private:
  int r_, s_;
  std::vector<int> theta_;
  std::vector<std::vector<int>> local_;
};

bool is_single_cycle(const std::vector<int>& perm);

struct QLabeling {
  ElementSet zeros;
  std::vector<std::uint8_t> symbols;
  friend bool operator==(const QLabeling&, const QLabeling&) = default;
};

// Throws std::invalid_argument if the labeling does not fit P and the alphabet.
void check_labeling(const Poset& P, const FlavorAlphabet& A, const QLabeling& L);

// p is active when it is maximal among the zeros or minimal among the ones.
bool is_active(const Poset& P, int p, const QLabeling& L);
QLabeling q_toggle(const Poset& P, const FlavorAlphabet& A, int p, const QLabeling& L);
// Toggles along the extension, the last element first.
QLabeling q_rowmotion_by_toggles(const Poset& P, const FlavorAlphabet& A, const std::vector<int>& extension,
                                 const QLabeling& L);
QLabeling q_rowmotion(const Poset& P, const FlavorAlphabet& A, const QLabeling& L);

// sum over ideals I of r^#(P\I) s^#I.
Integer count_labelings(const IdealSpace& S, int r, int s);

inline constexpr std::size_t kDefaultLabelingCap = 4'000'000;

// J_{r,s}(P), indexed by ideal (canonical order) then by the flavors of the
// elements in increasing index order, the first element varying fastest.
class LabelingSpace {
 public:
  // Throws ResourceError past `cap` labelings.
  LabelingSpace(const IdealSpace& S, FlavorAlphabet A, std::size_t cap = kDefaultLabelingCap);

  const IdealSpace& ideals() const { return S_; }
  const Poset& poset() const { return S_.poset(); }
  const FlavorAlphabet& alphabet() const { return A_; }
  std::size_t size() const { return total_; }

  QLabeling labeling(std::size_t index) const;
  std::size_t index_of(const QLabeling& L) const;
  // Index of the ideal underlying the labeling at `index`.
  std::size_t ideal_index(std::size_t index) const;

  // Image of every index under q-rowmotion.
  std::vector<std::size_t> rowmotion_permutation() const;
  std::vector<std::size_t> rowmotion_permutation(const std::vector<int>& extension) const;

 private:
  const IdealSpace& S_;
  FlavorAlphabet A_;
  std::vector<std::size_t> offset_;
  std::size_t total_ = 0;
};

// All labelings in index order.
std::vector<QLabeling> enumerate_labelings(const LabelingSpace& space);

struct QOrbits {
  // Index cycles, each starting at its least index.
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> sizes() const;
};
QOrbits q_orbits(const LabelingSpace& space);

struct QHomomesyReport {
  bool is_homomesic = false;
  Rational global_average;
  std::vector<Rational> orbit_averages;
  // Set when an expected c(q) was supplied: whether c(r/s) equals the common average.
  std::optional<bool> matches_expected;
};

// f is a statistic on J(P), read on a labeling through its ideal of zeros.
QHomomesyReport q_homomesy_check(const LabelingSpace& space, const QOrbits& orbits, const Vector<Rational>& f,
                                 const std::optional<RationalFunction>& expected = std::nullopt);

// Along an orbit, each element changes label a(r+s) times for some a >= 0,
// with a*r changes away from a one and a*s changes onto a zero.
struct FlavorCycleReport {
  bool holds = true;
  // First failure, as (orbit index, element).
  std::optional<std::pair<std::size_t, int>> counterexample;
};
FlavorCycleReport flavor_cycle_law(const LabelingSpace& space, const QOrbits& orbits);

}  // namespace rowmotion
