#include "rowmotion/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rowmotion {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  if (degree() < d.degree()) return {Polynomial(), rem};
  std::vector<Rational> quot(degree() - d.degree() + 1);
  const Rational& lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rational factor = rem.leading() / lead;
    quot[shift] = factor;
    for (int k = 0; k <= d.degree(); ++k) rem.c_[k + shift] -= factor * d.c_[k];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& x : c_) den = lcm(den, denominator_of(x));
  Integer content = 0;
  for (const auto& x : c_) content = boost::multiprecision::gcd(content, numerator_of(x * den));
  Rational scale = Rational(den) / Rational(content);
  if (c_.back() < 0) scale = -scale;
  return *this * scale;
}

std::string Polynomial::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) {
      out << to_string(mag);
      if (k > 0) out << "*";
    }
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(1);
  for (unsigned k = 0; k < e; ++k) r *= p;
  return r;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  int delta = a.degree() - b.degree();
  Rational scale = pow(b.leading(), delta + 1);
  return (a * scale).divmod(b).second;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(1);
  Polynomial f = a.primitive();
  Polynomial g = b.primitive();
  if (f.degree() < g.degree()) std::swap(f, g);
  Rational lead = 1;  // g_i in the subresultant recurrence
  Rational h = 1;
  while (true) {
    int delta = f.degree() - g.degree();
    Polynomial r = pseudo_remainder(f, g);
    if (r.is_zero()) break;
    if (r.degree() == 0) return Polynomial(1);
    f = g;
    g = r * (Rational(1) / (lead * pow(h, delta)));
    lead = f.leading();
    h = delta == 0 ? h : pow(lead, delta) / pow(h, delta - 1);
  }
  return g.primitive().monic();
}

int count_positive_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  Polynomial f = p;
  while (f.coeff(0) == 0) f = f.divmod(Polynomial::q()).first;
  if (f.degree() <= 0) return 0;
  std::vector<Polynomial> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto changes = [](const std::vector<Rational>& signs) {
    int count = 0;
    int prev = 0;
    for (const auto& s : signs) {
      int sg = s > 0 ? 1 : (s < 0 ? -1 : 0);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  };
  std::vector<Rational> at_zero, at_inf;
  for (const auto& g : chain) {
    at_zero.push_back(g.coeff(0));
    at_inf.push_back(g.leading());
  }
  return changes(at_zero) - changes(at_inf);
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::str(char var) const {
  if (is_polynomial()) return num_.str(var);
  auto wrap = [var](const Polynomial& p) {
    int terms = 0;
    for (const auto& c : p.coeffs())
      if (c != 0) ++terms;
    std::string s = p.str(var);
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

Polynomial q_number(int n) {
  if (n < 0) throw std::out_of_range("q_number of a negative integer");
  return Polynomial(std::vector<Rational>(n, Rational(1)));
}

Polynomial q_factorial(int n) {
  Polynomial r(1);
  for (int k = 1; k <= n; ++k) r *= q_number(k);
  return r;
}

RationalFunction q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("q_binomial needs 0 <= k <= n");
  RationalFunction r(q_factorial(n), q_factorial(k) * q_factorial(n - k));
  if (!r.is_polynomial()) throw std::logic_error("q-binomial is not a polynomial");
  return r;
}

namespace {

class QParser {
 public:
  explicit QParser(const std::string& s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad q-expression '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }
  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else return r;
    }
  }
  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    long e = integer();
    RationalFunction r(1);
    RationalFunction b = e < 0 ? RationalFunction(1) / base : base;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
    return r;
  }
  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      expect(')');
      return r;
    }
    if (c == '[') {
      ++pos_;
      long n = integer();
      expect(']');
      return RationalFunction(q_number(static_cast<int>(n)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (s_.compare(pos_, 6, "qbinom") == 0) {
      pos_ += 6;
      expect('(');
      long n = integer();
      expect(',');
      long k = integer();
      expect(')');
      return q_binomial(static_cast<int>(n), static_cast<int>(k));
    }
    if (s_.compare(pos_, 4, "qint") == 0) {
      pos_ += 4;
      expect('(');
      long n = integer();
      expect(')');
      return RationalFunction(q_number(static_cast<int>(n)));
    }
    if (c == 'q') {
      ++pos_;
      return RationalFunction(Polynomial::q());
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_q_expression(const std::string& text) { return QParser(text).parse(); }

}  // namespace rowmotion
