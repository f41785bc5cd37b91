#include "gauss/perimeter.hpp"

#include <cmath>

namespace extremal::gauss {

using certnum::EnclosureError;
using certnum::interval_exp;
using certnum::interval_log;
using certnum::interval_sqrt;
using certnum::sqr;
using certnum::to_interval;

Interval NazarovParams::rho() const {
  Interval n4 = interval_sqrt(interval_sqrt(Interval(static_cast<double>(n))));
  return to_interval(a) * n4;
}

Interval main_term_L(long long n, const Interval& rho) {
  if (n < 1 || !(rho.lo() > 0.0))
    throw EnclosureError("main_term_L requires n >= 1 and rho > 0");
  Interval inv_rho = Interval(1.0) / rho;
  Interval quartic = pow_int(rho, 4) / Interval(4.0 * static_cast<double>(n));
  Interval L = (Interval(1.0) / certnum::sqrt_2pi_enclosure()) * inv_rho *
               interval_exp(quartic) * interval_exp(-sqr(rho) / 2.0);
  if (L.lo() <= 0.0)
    throw EnclosureError("main_term_L underflow: zero-width enclosure, "
                         "N = floor(b/L) would overflow");
  return L;
}

Interval log_main_term_L(long long n, const Interval& rho) {
  if (n < 1 || !(rho.lo() > 0.0))
    throw EnclosureError("log_main_term_L requires n >= 1 and rho > 0");
  return -interval_log(certnum::sqrt_2pi_enclosure()) - interval_log(rho) +
         pow_int(rho, 4) / Interval(4.0 * static_cast<double>(n)) - sqr(rho) / 2.0;
}

BigInt half_space_count(const NazarovParams& p) {
  Interval L = main_term_L(p.n, p.rho());
  Interval ratio = to_interval(p.b) / L;
  Rational lo = certnum::rational_from_double(ratio.lo());
  BigInt n = numerator(lo) / denominator(lo);  // truncation == floor for lo > 0
  if (n < 1) throw EnclosureError("half_space_count: N < 1");
  return n;
}

Interval integrand_F(const Interval& w, const Rational& a, const Rational& b) {
  Interval a2 = to_interval(a * a);
  Interval bi = to_interval(b);
  return interval_exp(-sqr(w) - bi * interval_exp(a2 * w));
}

namespace {

// |F''| = |g'' + (g')^2| * F with g = -w^2 - b e^{a^2 w}.
Interval abs_F_second(const Interval& w, const Interval& a2, const Interval& a4,
                      const Interval& bi) {
  Interval be = bi * interval_exp(a2 * w);
  Interval g = -sqr(w) - be;
  Interval gp = -2.0 * w - a2 * be;
  Interval gpp = -Interval(2.0) - a4 * be;
  Interval inner = gpp + sqr(gp);
  Interval F = interval_exp(g);
  Interval prod = inner * F;
  double m = std::max(std::abs(prod.lo()), std::abs(prod.hi()));
  return Interval(0.0, m);
}

}  // namespace

Interval second_derivative_bound_M(const Rational& a, const Rational& b,
                                   const Rational& W) {
  if (!(a > 0)) throw EnclosureError("second_derivative_bound_M requires a > 0");
  Interval a2 = to_interval(a * a);
  Interval a4 = to_interval(a * a * a * a);
  Interval e = interval_exp(Interval(1.0));
  Interval sqrt2e = interval_sqrt(2.0 * e);
  Interval em2 = interval_exp(Interval(-2.0));
  Interval M = Interval(2.0) + a4 / e + Interval(4.0) / e +
               4.0 * a2 / (e * sqrt2e) + 4.0 * a4 * em2;

  // Sample the symbolic second derivative on a fine grid; the analytic bound
  // must dominate every sample within a 1e-9 relative allowance.
  Interval bi = to_interval(b);
  const double Wd = certnum::double_ge(W);
  const int grid = 4800;
  for (int i = 0; i <= grid; ++i) {
    double w = -Wd + 2.0 * Wd * i / grid;
    Interval s = abs_F_second(Interval(w), a2, a4, bi);
    if (s.hi() > M.lo() * (1.0 + 1e-9))
      throw EnclosureError("second-derivative grid sample exceeds M(a)");
  }
  return M;
}

Interval radial_density_cf(long long n, double w) {
  if (n < 2) throw EnclosureError("radial_density_cf requires n >= 2");
  Interval t = interval_sqrt(Interval(static_cast<double>(n - 1))) + Interval(w);
  if (!(t.lo() > 0.0))
    throw EnclosureError("radial_density_cf requires sqrt(n-1) + w > 0");
  // log c = -(n/2 - 1) log 2 - log Gamma(n/2)
  Interval log_c = -(Interval(static_cast<double>(n)) / 2.0 - 1.0) *
                       certnum::ln2_enclosure() -
                   certnum::lgamma_half(n);
  Interval log_f =
      Interval(static_cast<double>(n - 1)) * interval_log(t) - sqr(t) / 2.0;
  return interval_exp(log_c + log_f);
}

PerimeterCertificate certify_lower_bound(const NazarovParams& params,
                                         const Rational& target) {
  PerimeterCertificate cert;
  cert.params = params;
  cert.target = target;
  cert.inv_sqrt_pi = certnum::inv_sqrt_pi_enclosure();

  if (!(params.a > 0) || !(params.b >= 0) || !(params.W > 0) || !(params.h > 0))
    throw EnclosureError("certify_lower_bound: invalid parameters");

  Rational nodes = 2 * params.W / params.h;
  if (denominator(nodes) != 1 || numerator(nodes) > 100000000)
    throw EnclosureError("certify_lower_bound: 2W/h must be a small integer");
  long m = numerator(nodes).convert_to<long>();

  Interval M;
  try {
    M = second_derivative_bound_M(params.a, params.b, params.W);
  } catch (const EnclosureError&) {
    cert.failing_factor = "second_derivative_bound";
    return cert;
  }

  try {
    auto f = [&](const Interval& w) {
      return integrand_F(w, params.a, params.b);
    };
    cert.quadrature =
        trapezoid_lower(f, "exp(-w^2-b*e^(a^2 w))", -params.W, params.W, m, M);
  } catch (const EnclosureError&) {
    cert.failing_factor = "quadrature";
    return cert;
  }

  // Two-sided J from |J - T| <= M * (B-A)/12 * h^2.
  Rational corr = certnum::rational_from_double(M.hi()) * (2 * params.W) / 12 *
                  params.h * params.h;
  cert.J = Interval(cert.quadrature.integral_lower,
                    certnum::double_ge(certnum::rational_from_double(
                                           cert.quadrature.trapezoid_sum.hi()) +
                                       corr));

  try {
    Interval a4 = to_interval(params.a * params.a * params.a * params.a);
    cert.prefactor =
        to_interval(params.b) * to_interval(params.a) * interval_exp(-a4 / 4.0);
  } catch (const EnclosureError&) {
    cert.failing_factor = "prefactor";
    return cert;
  }

  double cl = certnum::nudge_down(cert.prefactor.lo() * cert.inv_sqrt_pi.lo());
  cl = certnum::nudge_down(cl * cert.quadrature.integral_lower);
  cert.constant_lower = std::max(cl, 0.0);
  cert.certified = certnum::rational_from_double(cert.constant_lower) >= target;
  if (!cert.certified && cert.failing_factor.empty())
    cert.failing_factor = cert.prefactor.lo() <= 0.0 ? "prefactor" : "constant_lower";
  return cert;
}

}  // namespace extremal::gauss
