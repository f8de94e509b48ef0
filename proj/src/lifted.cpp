#include "rowmotion/lifted.hpp"

#include "rowmotion/dynamics.hpp"
#include "rowmotion/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rowmotion {

namespace {

using Eigen::Index;

Rational lower_max(const Poset& P, int p, const PLPoint& x) {
  const auto& lo = P.lower_covers(p);
  if (lo.empty()) return x.alpha;
  Rational m = x.values(lo[0]);
  for (int r : lo) m = std::max(m, Rational(x.values(r)));
  return m;
}

Rational upper_min(const Poset& P, int p, const PLPoint& x) {
  const auto& up = P.upper_covers(p);
  if (up.empty()) return x.omega;
  Rational m = x.values(up[0]);
  for (int r : up) m = std::min(m, Rational(x.values(r)));
  return m;
}

Rational lower_sum(const Poset& P, int p, const BPoint& x) {
  const auto& lo = P.lower_covers(p);
  if (lo.empty()) return x.alpha;
  Rational s = 0;
  for (int r : lo) s += x.values(r);
  return s;
}

// sum of reciprocals over upper covers (1/omega at a maximal element).
Rational upper_reciprocal_sum(const Poset& P, int p, const BPoint& x) {
  const auto& up = P.upper_covers(p);
  if (up.empty()) return 1 / x.omega;
  Rational s = 0;
  for (int r : up) s += 1 / x.values(r);
  return s;
}

template <class Point, class Toggle>
Point along_extension(const Poset& P, const Point& x, Toggle toggle) {
  Point y = x;
  const auto ext = linear_extension(P);
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) y = toggle(P, *it, y);
  return y;
}

template <class Point, class Toggle>
Point along_ranks(const Poset& P, const std::vector<int>& sigma, const Point& x, Toggle toggle) {
  check_rank_permutation(P, sigma);
  Point y = x;
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it)
    for (int p = 0; p < P.size(); ++p)
      if (P.rank(p) == *it) y = toggle(P, p, y);
  return y;
}

std::vector<int> parse_sigma(const std::string& variant) {
  std::vector<int> sigma;
  std::stringstream in(variant.substr(6));
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      sigma.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rank permutation '" + variant + "'");
    }
  }
  return sigma;
}

template <class Point, class Row, class RowSigma>
std::function<Point(const Point&)> make_action(const Poset& P, const std::string& variant, Row row, RowSigma row_sigma) {
  if (variant == "rowmotion") return [&P, row](const Point& x) { return row(P, x); };
  std::vector<int> sigma;
  if (variant == "gyration") sigma = gyration_sequence(P);
  else if (variant.rfind("sigma:", 0) == 0) sigma = parse_sigma(variant);
  else throw std::invalid_argument("unknown action '" + variant + "'");
  check_rank_permutation(P, sigma);
  return [&P, sigma, row_sigma](const Point& x) { return row_sigma(P, sigma, x); };
}

}  // namespace

void check_point(const Poset& P, const PLPoint& x) {
  if (x.values.size() != P.size()) throw std::invalid_argument("point size does not match the poset");
}

void check_point(const Poset& P, const BPoint& x) {
  if (x.values.size() != P.size()) throw std::invalid_argument("point size does not match the poset");
  if (x.alpha <= 0 || x.omega <= 0) throw std::invalid_argument("birational boundary values must be positive");
  for (Index k = 0; k < x.values.size(); ++k)
    if (x.values(k) <= 0) throw std::invalid_argument("birational point must be positive");
}

PLPoint vertex_point(const Poset& P, const ElementSet& ideal) {
  PLPoint x{Vector<Rational>(P.size()), 0, 1};
  for (int p = 0; p < P.size(); ++p) x.values(p) = ideal.contains(p) ? 0 : 1;
  return x;
}

std::optional<ElementSet> vertex_ideal(const Poset& P, const PLPoint& x) {
  if (x.values.size() != P.size() || x.alpha != 0 || x.omega != 1) return std::nullopt;
  ElementSet I;
  for (int p = 0; p < P.size(); ++p) {
    if (x.values(p) == 0) I.insert(p);
    else if (x.values(p) != 1) return std::nullopt;
  }
  if (!is_order_ideal(P, I)) return std::nullopt;
  return I;
}

PLPoint random_pl_point(const Poset& P, std::mt19937_64& rng, Rational alpha, Rational omega) {
  PLPoint x{Vector<Rational>(P.size()), std::move(alpha), std::move(omega)};
  for (int p = 0; p < P.size(); ++p) x.values(p) = random_rational(rng);
  return x;
}

BPoint random_b_point(const Poset& P, std::mt19937_64& rng, Rational alpha, Rational omega) {
  BPoint x{Vector<Rational>(P.size()), std::move(alpha), std::move(omega)};
  for (int p = 0; p < P.size(); ++p) x.values(p) = random_positive_rational(rng);
  check_point(P, x);
  return x;
}

PLPoint pl_toggle(const Poset& P, int p, const PLPoint& x) {
  check_element(P, p);
  PLPoint y = x;
  y.values(p) = upper_min(P, p, x) + lower_max(P, p, x) - x.values(p);
  return y;
}

PLPoint pl_rowmotion(const Poset& P, const PLPoint& x) {
  check_point(P, x);
  return along_extension(P, x, pl_toggle);
}

PLPoint pl_rowmotion_sigma(const Poset& P, const std::vector<int>& sigma, const PLPoint& x) {
  check_point(P, x);
  return along_ranks(P, sigma, x, pl_toggle);
}

BPoint b_toggle(const Poset& P, int p, const BPoint& x) {
  check_element(P, p);
  BPoint y = x;
  y.values(p) = lower_sum(P, p, x) / (x.values(p) * upper_reciprocal_sum(P, p, x));
  return y;
}

BPoint b_rowmotion(const Poset& P, const BPoint& x) {
  check_point(P, x);
  return along_extension(P, x, b_toggle);
}

BPoint b_rowmotion_sigma(const Poset& P, const std::vector<int>& sigma, const BPoint& x) {
  check_point(P, x);
  return along_ranks(P, sigma, x, b_toggle);
}

std::function<PLPoint(const PLPoint&)> pl_action(const Poset& P, const std::string& variant) {
  return make_action<PLPoint>(P, variant, pl_rowmotion, pl_rowmotion_sigma);
}

std::function<BPoint(const BPoint&)> b_action(const Poset& P, const std::string& variant) {
  return make_action<BPoint>(P, variant, b_rowmotion, b_rowmotion_sigma);
}

Rational pl_toggleability(ToggleKind kind, const Poset& P, int p, const PLPoint& x) {
  check_element(P, p);
  Rational in = x.values(p) - lower_max(P, p, x);
  Rational out = upper_min(P, p, x) - x.values(p);
  switch (kind) {
    case ToggleKind::in: return in;
    case ToggleKind::out: return out;
    case ToggleKind::signed_: return in - out;
  }
  return 0;
}

Rational b_toggleability(ToggleKind kind, const Poset& P, int p, const BPoint& x) {
  check_element(P, p);
  Rational in = x.values(p) / lower_sum(P, p, x);
  Rational out = 1 / (x.values(p) * upper_reciprocal_sum(P, p, x));
  switch (kind) {
    case ToggleKind::in: return in;
    case ToggleKind::out: return out;
    case ToggleKind::signed_: return in / out;
  }
  return 0;
}

FactoredValue& FactoredValue::operator*=(const FactoredValue& o) {
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

bool FactoredValue::equals_power(const Rational& base, const Rational& exponent) const {
  Integer L = denominator_of(exponent);
  for (const auto& [b, e] : factors) L = lcm(L, denominator_of(e));
  auto scaled = [&](const Rational& e) {
    Rational s = e * Rational(L);
    return static_cast<long>(numerator_of(s));
  };
  // Positive and negative exponents are collected separately so that the
  // comparison is num_lhs * den_rhs == num_rhs * den_lhs without inverses.
  Rational lhs_up = 1, lhs_down = 1;
  for (const auto& [b, e] : factors) {
    long k = scaled(e);
    if (k > 0) lhs_up *= pow(b, k);
    else if (k < 0) lhs_down *= pow(b, -k);
  }
  Rational rhs_up = 1, rhs_down = 1;
  long k = scaled(exponent);
  if (k > 0) rhs_up = pow(base, k);
  else if (k < 0) rhs_down = pow(base, -k);
  return lhs_up * rhs_down == rhs_up * lhs_down;
}

std::optional<Rational> FactoredValue::value() const {
  Rational v = 1;
  for (const auto& [b, e] : factors) {
    if (!is_integer(e)) return std::nullopt;
    v *= pow(b, static_cast<long>(numerator_of(e)));
  }
  return v;
}

LiftedStatistic lift_statistic(const Poset& P, const ToggleForm& form) {
  for (int p = 0; p < P.size(); ++p) {
    if (P.lower_covers(p).size() > 2 || P.upper_covers(p).size() > 2)
      throw std::invalid_argument("lifting needs every element to cover, and be covered by, at most two elements; " +
                                  P.label(p) + " covers " + std::to_string(P.lower_covers(p).size()) +
                                  " and is covered by " + std::to_string(P.upper_covers(p).size()));
  }
  if (form.in.size() != P.size() || form.out.size() != P.size() || form.ind.size() != P.size())
    throw std::invalid_argument("form size does not match the poset");
  return {form};
}

LiftedStatistic lift_certificate(const Poset& P, const ToggleForm& form, const Decomposition<Rational>& d) {
  if (d.coeffs.size() != P.size()) throw std::invalid_argument("certificate size does not match the poset");
  ToggleForm g = form;
  g.in -= d.coeffs;
  g.out += d.coeffs;
  return lift_statistic(P, g);
}

Rational evaluate_pl(const Poset& P, const LiftedStatistic& f, const PLPoint& x) {
  check_point(P, x);
  Rational v = 0;
  for (int p = 0; p < P.size(); ++p) {
    if (f.form.in(p) != 0) v += f.form.in(p) * pl_toggleability(ToggleKind::in, P, p, x);
    if (f.form.out(p) != 0) v += f.form.out(p) * pl_toggleability(ToggleKind::out, P, p, x);
    if (f.form.ind(p) != 0) v += f.form.ind(p) * (x.omega - x.values(p));
  }
  return v;
}

FactoredValue evaluate_b(const Poset& P, const LiftedStatistic& f, const BPoint& x) {
  check_point(P, x);
  FactoredValue v;
  for (int p = 0; p < P.size(); ++p) {
    if (f.form.in(p) != 0) v.factors.emplace_back(b_toggleability(ToggleKind::in, P, p, x), f.form.in(p));
    if (f.form.out(p) != 0) v.factors.emplace_back(b_toggleability(ToggleKind::out, P, p, x), f.form.out(p));
    if (f.form.ind(p) != 0) v.factors.emplace_back(x.omega / x.values(p), f.form.ind(p));
  }
  return v;
}

LiftedOrbitReport orbit_homomesy_pl(const Poset& P, const LiftedStatistic& f, const Rational& c,
                                    const std::function<PLPoint(const PLPoint&)>& action, const PLPoint& start,
                                    std::size_t max_iter) {
  LiftedOrbitReport r;
  auto orbit = finite_orbit(action, start, max_iter);
  if (!orbit) return r;
  r.finite = true;
  r.period = orbit->size();
  Rational sum = 0;
  for (const auto& x : *orbit) sum += evaluate_pl(P, f, x);
  r.law_holds = sum == Rational(static_cast<long>(r.period)) * c * (start.omega - start.alpha);
  return r;
}

LiftedOrbitReport orbit_homomesy_b(const Poset& P, const LiftedStatistic& f, const Rational& c,
                                   const std::function<BPoint(const BPoint&)>& action, const BPoint& start,
                                   std::size_t max_iter) {
  LiftedOrbitReport r;
  auto orbit = finite_orbit(action, start, max_iter);
  if (!orbit) return r;
  r.finite = true;
  r.period = orbit->size();
  FactoredValue prod;
  for (const auto& x : *orbit) prod *= evaluate_b(P, f, x);
  r.law_holds = prod.equals_power(start.omega / start.alpha, Rational(static_cast<long>(r.period)) * c);
  return r;
}

}  // namespace rowmotion
