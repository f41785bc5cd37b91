#pragma once

#include <vector>

#include "certnum/polynomial.hpp"
#include "certnum/rational.hpp"

namespace extremal::cube {

using certnum::BigInt;
using certnum::poly_mul;
using certnum::Rational;
using certnum::rational_eval;
using certnum::RatPoly;

// Monic probabilists' Hermite polynomial He_m with integer coefficients,
// from the recurrence He_{m+1} = x He_m - m He_{m-1}.
struct HermitePoly {
  int degree = 0;
  std::vector<BigInt> coeffs;  // coefficient of x^i at index i

  RatPoly as_poly() const {
    RatPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) p[i] = Rational(coeffs[i]);
    return p;
  }
};

HermitePoly hermite(int m);

// Exact E_gamma[p(x)] via E[x^{2k}] = (2k-1)!!; odd powers vanish.
Rational gaussian_moment(const RatPoly& p);

// Polynomial in s = x^2 representing an even polynomial exactly.
struct EvenPolyRational {
  RatPoly coeffs_in_s;  // value at x is rational_eval(coeffs_in_s, x^2)

  Rational eval_at_square(const Rational& s) const {
    return certnum::rational_eval(coeffs_in_s, s);
  }
};

// Requires p even (odd coefficients all zero).
EvenPolyRational even_form(const RatPoly& p);

struct MomentRatioReport {
  int m = 0;
  Rational gaussian_L2_sq;  // = m!
  Rational gaussian_L4_4;   // E[He_m^4]
  double ratio_sq = 0.0;    // ||He_m||_4^2 / ||He_m||_2^2
  double root = 0.0;        // ratio_sq^{1/(2m)}
};

MomentRatioReport gaussian_ratio_root(int m);

}  // namespace extremal::cube
