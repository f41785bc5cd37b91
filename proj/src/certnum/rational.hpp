#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "certnum/interval.hpp"

namespace extremal::certnum {

using BigInt = boost::multiprecision::cpp_int;
// Canonical form (gcd(num,den)=1, den>0) is maintained by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers, and decimal literals ("0.312584", "-1.5e-3").
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when q = 1).
std::string rational_string(const Rational& r);

// Exact binary expansion of a finite double.
Rational rational_from_double(double x);

// Largest double <= r and smallest double >= r.
double double_le(const Rational& r);
double double_ge(const Rational& r);

// Tightest double-interval enclosure of r.
Interval to_interval(const Rational& r);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
BigInt double_factorial_odd(unsigned k);  // (2k-1)!!

}  // namespace extremal::certnum
