#include "rowmotion/rational.hpp"

#include <stdexcept>

namespace rowmotion {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& x) { return x.str(); }

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / x, -e);
  }
  Integer n = boost::multiprecision::pow(numerator_of(x), static_cast<unsigned>(e));
  Integer d = boost::multiprecision::pow(denominator_of(x), static_cast<unsigned>(e));
  return Rational(n, d);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  int n = num(rng);
  int d = den(rng);
  return Rational(n, d);
}

Rational random_positive_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(1, bound);
  int n = dist(rng);
  int d = dist(rng);
  return Rational(n, d);
}

}  // namespace rowmotion
