#pragma once

// Exact scalars: arbitrary precision integers and rationals (GMP backed),
// usable as Eigen scalar types.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <random>
#include <string>
#include <string_view>

namespace rowmotion {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

// x^e for any integer e (x != 0 when e < 0).
Rational pow(const Rational& x, long e);

Integer lcm(const Integer& a, const Integer& b);

// Uniform rational num/den with |num| <= bound, 1 <= den <= bound.
Rational random_rational(std::mt19937_64& rng, int bound = 100);
// Same but strictly positive.
Rational random_positive_rational(std::mt19937_64& rng, int bound = 100);

}  // namespace rowmotion
