#pragma once

#include <vector>

#include "certnum/rational.hpp"

namespace extremal::certnum {

// Dense univariate polynomial over the rationals, coefficient of x^i at
// index i. Trailing zeros are harmless.
using RatPoly = std::vector<Rational>;

// Exact Horner evaluation, no rounding anywhere.
inline Rational rational_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace extremal::certnum
