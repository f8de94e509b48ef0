#pragma once

// Statistics on J(P): indicator and toggleability statistics, rooks, named
// refinements, antichain toggleability, and homomesy checks.

#include "rowmotion/polynomial.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rowmotion {

// Coefficients of a statistic on T+_p, T-_p and 1_p, per element.
struct ToggleForm {
  Vector<Rational> in, out, ind;

  static ToggleForm zero(int n);
  ToggleForm& operator+=(const ToggleForm& o);
  ToggleForm& operator-=(const ToggleForm& o);
  ToggleForm& operator*=(const Rational& c);
  friend ToggleForm operator+(ToggleForm a, const ToggleForm& b) { return a += b; }
  friend ToggleForm operator-(ToggleForm a, const ToggleForm& b) { return a -= b; }
  friend ToggleForm operator*(const Rational& c, ToggleForm a) { return a *= c; }
  friend bool operator==(const ToggleForm& a, const ToggleForm& b) {
    return a.in == b.in && a.out == b.out && a.ind == b.ind;
  }
};

// Values over the canonical ideal order of one IdealSpace, with a label and,
// when known, a symbolic form in the toggleability basis.
template <class Scalar>
struct BasicStatistic {
  Vector<Scalar> values;
  std::string label;
  std::optional<ToggleForm> form;

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
  const Scalar& operator[](std::size_t k) const { return values(static_cast<Eigen::Index>(k)); }
};

using Statistic = BasicStatistic<Rational>;
using QStatistic = BasicStatistic<RationalFunction>;

Statistic operator+(const Statistic& a, const Statistic& b);
Statistic operator-(const Statistic& a, const Statistic& b);
Statistic operator*(const Rational& c, const Statistic& a);

// Pointwise toggleability at an arbitrary ideal.
inline bool toggles_in(const Poset& P, int p, const ElementSet& ideal) {
  return !ideal.contains(p) && P.lower_cover_set(p).subset_of(ideal);
}
inline bool toggles_out(const Poset& P, int p, const ElementSet& ideal) {
  return ideal.contains(p) && !P.upper_cover_set(p).intersects(ideal);
}
Rational evaluate(const Poset& P, const ToggleForm& form, const ElementSet& ideal);

Statistic from_form(const IdealSpace& S, const ToggleForm& form, std::string label);
Statistic constant_statistic(const IdealSpace& S, const Rational& c);

Statistic indicator_ideal(const IdealSpace& S, int p);
Statistic t_in(const IdealSpace& S, int p);
Statistic t_out(const IdealSpace& S, int p);
Statistic t_signed(const IdealSpace& S, int p);
// T+_p - q T-_p.
QStatistic t_q(const IdealSpace& S, int p);
// The q-statistic with the same (rational) values.
QStatistic to_q(const Statistic& f);

// Element at grid cell (i,j); std::nullopt off the poset.
std::optional<int> cell(const Poset& P, int i, int j);

// Rooks. `reduced` selects the antichain (T-) form. Throws
// std::invalid_argument for a family mismatch or an index out of range.
Statistic rook_rect(const IdealSpace& S, int i, int j, bool reduced);
Statistic rook_sstair(const IdealSpace& S, int i, int j, bool reduced);
Statistic rook_A(const IdealSpace& S, int i, bool reduced);
Statistic rook_B(const IdealSpace& S, int i, bool reduced);
// Variant rooks on the type B root poset, pulled back from type A_{2n-1}.
Statistic var_rook_B(const IdealSpace& S, int i, bool reduced);

// Forms behind the rook statistics.
ToggleForm rook_rect_form(const Poset& P, int i, int j, bool reduced);
ToggleForm rook_sstair_form(const Poset& P, int i, int j, bool reduced);
ToggleForm rook_A_form(const Poset& P, int i, bool reduced);
ToggleForm rook_B_form(const Poset& P, int i, bool reduced);
ToggleForm var_rook_B_form(const Poset& P, int i, bool reduced);

enum class ToggleKind { in, out, signed_ };

// T+_A, T-_A or T_A; throws std::invalid_argument if A is not an antichain.
Statistic antichain_toggleability(const IdealSpace& S, const ElementSet& antichain, ToggleKind kind);

struct NamedKind {
  enum Type {
    ideal_card,
    antichain_card,
    file,
    pos_fiber,
    neg_fiber,
    hook_fiber,
    rank_alternating,
    diag_antichain,
    color_class
  } type;
  int arg = 0;
};

// ideal_card, antichain_card, file(k) = sum of 1_p over j-i=k, pos_fiber(i)
// and neg_fiber(j) = sum of T-_p over row i / column j, hook_fiber(i) = sum of
// T-_{j,i} (j<=i) and T-_{i,j} (j>i), rank_alternating, diag_antichain, and
// color_class(c) = sum of 1_p over elements of color c.
Statistic named_statistic(const IdealSpace& S, NamedKind kind);

// Parses linear combinations such as "2*file:0 - file:1 - file:-1" or
// "1/2*rrookA:1 - 1/2*rrookA:2". Atoms: ideal_card, antichain_card, rankalt,
// diag, one, file:k, pfiber:i, nfiber:j, lfiber:i, color:c, ind/tin/tout/t with
// "i,j" (cell) or "p" (element index), rook:i,j, rrook:i,j, rookA:i,
// rrookA:i, rookB:i, rrookB:i, vrookB:i, rvrookB:i. Throws
// std::invalid_argument on malformed input.
Statistic parse_statistic(const IdealSpace& S, const std::string& expr);

struct HomomesyReport {
  bool is_homomesic = false;
  Rational global_average;
  std::vector<Rational> orbit_averages;
};

HomomesyReport homomesy_check(const Vector<Rational>& values, const std::vector<std::vector<std::size_t>>& orbits);
// Orbits of the permutation `action` of ideal indices.
HomomesyReport homomesy_check(const Statistic& f, const std::vector<std::size_t>& action);

}  // namespace rowmotion
