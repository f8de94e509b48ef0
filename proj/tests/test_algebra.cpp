#include "rowmotion/polynomial.hpp"
#include "rowmotion/rational.hpp"

#include <doctest.h>

#include <random>

using namespace rowmotion;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("rational powers") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("polynomial arithmetic and division") {
  Polynomial q = Polynomial::q();
  Polynomial a = (q + 1) * (q - 2);
  CHECK(a == Polynomial(std::vector<Rational>{-2, -1, 1}));
  auto [quo, rem] = a.divmod(q + 1);
  CHECK(quo == q - 2);
  CHECK(rem.is_zero());
  CHECK_THROWS(a.exact_div(q + 3));
  CHECK(a(Rational(2)) == 0);
  CHECK(a.derivative() == Polynomial(2) * q - 1);
}

TEST_CASE("polynomial gcd against the factorization") {
  Polynomial q = Polynomial::q();
  Polynomial common = (q + 1) * (q * q + 1);
  Polynomial a = common * (q - 3), b = common * (Polynomial(2) * q + 5) * (q + 1);
  CHECK(gcd(a, b) == common.monic());
  CHECK(gcd(q - 1, q + 1) == Polynomial(1));
  CHECK(gcd(Polynomial(), q + 2) == q + 2);
}

TEST_CASE("positive root count") {
  Polynomial q = Polynomial::q();
  CHECK(count_positive_roots((q - 1) * (q - 2) * (q + 3)) == 2);
  CHECK(count_positive_roots(q * q + 1) == 0);
  CHECK(count_positive_roots(q * (q + 1)) == 0);
  CHECK(count_positive_roots((q - Polynomial(Rational(1, 2))) * (q - Polynomial(Rational(1, 2)))) == 1);
}

TEST_CASE("q-numbers and q-binomials") {
  CHECK(q_number(0).is_zero());
  CHECK(q_number(3) == Polynomial(std::vector<Rational>{1, 1, 1}));
  // qbinom(4,2) = 1 + q + 2q^2 + q^3 + q^4
  CHECK(q_binomial(4, 2) == RationalFunction(Polynomial(std::vector<Rational>{1, 1, 2, 1, 1})));
  CHECK(q_binomial(4, 2)(Rational(1)) == 6);
  CHECK(q_binomial(4, 2)(Rational(1, 2)) == Rational(35, 16));
  CHECK_THROWS_AS(q_binomial(2, 3), std::out_of_range);
}

TEST_CASE("rational functions normalize") {
  Polynomial q = Polynomial::q();
  RationalFunction f((q * q - 1) * Rational(2), (q + 1) * Rational(4));
  CHECK(f == RationalFunction(q - 1) * RationalFunction(Rational(1, 2)));
  CHECK(RationalFunction(1) / RationalFunction(q + 1) + RationalFunction(q) / RationalFunction(q + 1) == 1);
  CHECK_THROWS_AS(RationalFunction(Polynomial(1), q - 1)(Rational(1)), std::domain_error);
  CHECK(RationalFunction(Polynomial(1), q + 1).str() == "1/(q + 1)");
}

TEST_CASE("q-expression parser") {
  Polynomial q = Polynomial::q();
  CHECK(parse_q_expression("1/(1+q)") == RationalFunction(Polynomial(1), q + 1));
  CHECK(parse_q_expression("[2]*[3]/[5]") ==
        RationalFunction(q_number(2) * q_number(3)) / RationalFunction(q_number(5)));
  CHECK(parse_q_expression("qbinom(4,2)/[6]") == q_binomial(4, 2) / RationalFunction(q_number(6)));
  CHECK(parse_q_expression("q^2*[3] - 1/2") == RationalFunction(q * q * q_number(3)) - RationalFunction(Rational(1, 2)));
  CHECK_THROWS_AS(parse_q_expression("(1+q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_q_expression("q^x"), std::invalid_argument);
}

TEST_CASE("random rationals stay in range") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Rational x = random_positive_rational(rng, 10);
    CHECK(x > 0);
    CHECK(x <= 10);
  }
}
