#pragma once

// Univariate polynomials over Q in the indeterminate q, and the field Q(q).

#include "rowmotion/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rowmotion {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c);
  // Coefficients from degree 0 upward; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial q() { return monomial(1, 1); }
  static Polynomial monomial(const Rational& c, int degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Euclidean division over Q; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  // Exact quotient; throws if the division leaves a remainder.
  Polynomial exact_div(const Polynomial& d) const;

  Polynomial monic() const;
  Polynomial derivative() const;
  // Scaled to integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;

  std::string str(char var = 'q') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Monic gcd (zero only if both inputs are zero). Subresultant PRS on the
// primitive integer parts.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Distinct real roots in (0, inf), by Sturm's theorem.
int count_positive_roots(const Polynomial& p);

// Elements of Q(q): numerator/denominator kept coprime with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Total degree, used as the pivot size in elimination.
  int weight() const { return num_.degree() + den_.degree(); }

  std::string str(char var = 'q') const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Polynomial q_number(int n);
Polynomial q_factorial(int n);
// Gaussian binomial; throws std::out_of_range unless 0 <= k <= n.
RationalFunction q_binomial(int n, int k);

// Parses expressions in q such as "qbinom(4,2)/[6]", "q^2*[3]/[5]", "1/(1+q)".
// Supports numbers, q, + - * / ^ (integer exponents), parentheses, [n] and
// qbinom(n,k). Throws std::invalid_argument on malformed input.
RationalFunction parse_q_expression(const std::string& text);

}  // namespace rowmotion

namespace Eigen {
template <>
struct NumTraits<rowmotion::RationalFunction> : GenericNumTraits<rowmotion::RationalFunction> {
  using Real = rowmotion::RationalFunction;
  using NonInteger = rowmotion::RationalFunction;
  using Literal = rowmotion::RationalFunction;
  using Nested = rowmotion::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 500,
    MulCost = 500
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
