#pragma once

// Piecewise-linear and birational rowmotion over exact rationals, lifted
// toggleability statistics, and orbit sum/product laws.

#include "rowmotion/decompose.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"
#include "rowmotion/statistics.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace rowmotion {

// A point of R^P with boundary values at the added bottom (alpha) and top (omega).
struct PLPoint {
  Vector<Rational> values;
  Rational alpha = 0;
  Rational omega = 1;
  friend bool operator==(const PLPoint& a, const PLPoint& b) {
    return a.alpha == b.alpha && a.omega == b.omega && a.values == b.values;
  }
};

// A point of the positive orthant; all entries and both boundaries are > 0.
struct BPoint {
  Vector<Rational> values;
  Rational alpha = 1;
  Rational omega = 1;
  friend bool operator==(const BPoint& a, const BPoint& b) {
    return a.alpha == b.alpha && a.omega == b.omega && a.values == b.values;
  }
};

// Throws std::invalid_argument on a size mismatch or a nonpositive entry.
void check_point(const Poset& P, const PLPoint& x);
void check_point(const Poset& P, const BPoint& x);

// Indicator of the complement of I, with alpha = 0 and omega = 1.
PLPoint vertex_point(const Poset& P, const ElementSet& ideal);
// The ideal whose vertex point is x; std::nullopt if x is not such a point.
std::optional<ElementSet> vertex_ideal(const Poset& P, const PLPoint& x);

PLPoint random_pl_point(const Poset& P, std::mt19937_64& rng, Rational alpha = 0, Rational omega = 1);
BPoint random_b_point(const Poset& P, std::mt19937_64& rng, Rational alpha = 1, Rational omega = 1);

PLPoint pl_toggle(const Poset& P, int p, const PLPoint& x);
PLPoint pl_rowmotion(const Poset& P, const PLPoint& x);
PLPoint pl_rowmotion_sigma(const Poset& P, const std::vector<int>& sigma, const PLPoint& x);

BPoint b_toggle(const Poset& P, int p, const BPoint& x);
BPoint b_rowmotion(const Poset& P, const BPoint& x);
BPoint b_rowmotion_sigma(const Poset& P, const std::vector<int>& sigma, const BPoint& x);

// Actions selected by name as for ideal_action: "rowmotion", "gyration",
// "sigma:<r0>,<r1>,...".
std::function<PLPoint(const PLPoint&)> pl_action(const Poset& P, const std::string& variant);
std::function<BPoint(const BPoint&)> b_action(const Poset& P, const std::string& variant);

Rational pl_toggleability(ToggleKind kind, const Poset& P, int p, const PLPoint& x);
Rational b_toggleability(ToggleKind kind, const Poset& P, int p, const BPoint& x);

// prod base^exponent with rational exponents, kept unevaluated.
struct FactoredValue {
  std::vector<std::pair<Rational, Rational>> factors;

  FactoredValue& operator*=(const FactoredValue& o);
  // Exact comparison with base^exponent, after raising both sides to the
  // least common multiple of the exponent denominators.
  bool equals_power(const Rational& base, const Rational& exponent) const;
  // The value, when every exponent is an integer.
  std::optional<Rational> value() const;
};

// Coefficients (a_p, a'_p, a''_p) on T+_p, T-_p and 1_p.
struct LiftedStatistic {
  ToggleForm form;
};

// Throws std::invalid_argument unless every element covers at most two and is
// covered by at most two elements.
LiftedStatistic lift_statistic(const Poset& P, const ToggleForm& form);
// The form minus sum_p c_p T_p, which is identically the certificate's constant.
LiftedStatistic lift_certificate(const Poset& P, const ToggleForm& form, const Decomposition<Rational>& d);

Rational evaluate_pl(const Poset& P, const LiftedStatistic& f, const PLPoint& x);
FactoredValue evaluate_b(const Poset& P, const LiftedStatistic& f, const BPoint& x);

inline constexpr std::size_t kDefaultLiftedOrbitCap = 10'000;

template <class Point>
std::optional<std::vector<Point>> finite_orbit(const std::function<Point(const Point&)>& f, const Point& start,
                                               std::size_t max_iter = kDefaultLiftedOrbitCap) {
  std::vector<Point> states{start};
  Point x = f(start);
  while (!(x == start)) {
    if (states.size() >= max_iter) return std::nullopt;
    states.push_back(x);
    x = f(x);
  }
  return states;
}

struct LiftedOrbitReport {
  bool finite = false;
  std::size_t period = 0;
  bool law_holds = false;
};

// Sum over the orbit of f^PL equals #O * c * (omega - alpha). An orbit not
// closing within max_iter is reported as not finite.
LiftedOrbitReport orbit_homomesy_pl(const Poset& P, const LiftedStatistic& f, const Rational& c,
                                    const std::function<PLPoint(const PLPoint&)>& action, const PLPoint& start,
                                    std::size_t max_iter = kDefaultLiftedOrbitCap);
// Product over the orbit of f^B equals (omega/alpha)^(#O * c).
LiftedOrbitReport orbit_homomesy_b(const Poset& P, const LiftedStatistic& f, const Rational& c,
                                   const std::function<BPoint(const BPoint&)>& action, const BPoint& start,
                                   std::size_t max_iter = kDefaultLiftedOrbitCap);

}  // namespace rowmotion
