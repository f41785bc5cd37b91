#pragma once

#include <string>

#include "certnum/functions.hpp"
#include "certnum/interval.hpp"
#include "certnum/quadrature.hpp"
#include "certnum/rational.hpp"

namespace extremal::gauss {

using certnum::BigInt;
using certnum::Interval;
using certnum::Rational;

// Parameters of the random-polytope construction. a, b, W, h are exact
// rationals; rho = a * n^{1/4} and N = floor(b / L(n, rho)) are derived.
struct NazarovParams {
  long long n = 10000;
  Rational a = Rational(6131, 5000);
  Rational b = Rational(2387, 1000);
  Rational W = Rational(6);
  Rational h = Rational(1, 2000);

  Interval rho() const;
};

// L(n, rho) = (1/sqrt(2*pi)) * (1/rho) * exp(rho^4/(4n)) * exp(-rho^2/2).
Interval main_term_L(long long n, const Interval& rho);

// log L(n, rho); usable far past the underflow range of L itself.
Interval log_main_term_L(long long n, const Interval& rho);

// N = floor(b / L(n, rho)), taken at the lower endpoint of the enclosure.
// Throws EnclosureError when L underflows to a zero-width enclosure.
BigInt half_space_count(const NazarovParams& p);

// F(w) = exp(-w^2 - b * e^{a^2 w}).
Interval integrand_F(const Interval& w, const Rational& a, const Rational& b);

// Global bound for |F''|:
//   M(a) = 2 + a^4/e + 4/e + 4a^2/(e*sqrt(2e)) + 4a^4 e^{-2}.
// Additionally samples the symbolic |F''| on a fine grid of [-W, W] and
// rejects if any sample exceeds M.lo * (1 + 1e-9).
Interval second_derivative_bound_M(const Rational& a, const Rational& b,
                                   const Rational& W);

// c * f(sqrt(n-1) + w) with f(t) = t^{n-1} e^{-t^2/2} and
// c = 1 / (2^{n/2-1} Gamma(n/2)), evaluated through certified log-gamma.
Interval radial_density_cf(long long n, double w);

struct PerimeterCertificate {
  NazarovParams params;
  certnum::QuadratureCert quadrature;  // T, M, J_lo over [-W, W]
  Interval J;                          // two-sided enclosure of the integral
  Interval prefactor;                  // b * a * e^{-a^4/4}
  Interval inv_sqrt_pi;
  double constant_lower = 0.0;
  Rational target;
  bool certified = false;
  std::string failing_factor;  // non-empty iff a factor failed to certify
};

// Runs the full pipeline: certified quadrature of F over [-W, W] with
// m = 2W/h nodes, then the outward-rounded three-factor product.
PerimeterCertificate certify_lower_bound(const NazarovParams& params,
                                         const Rational& target);

}  // namespace extremal::gauss
