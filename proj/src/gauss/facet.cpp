#include "gauss/facet.hpp"

#include <cmath>

#include "certnum/functions.hpp"
#include "gauss/perimeter.hpp"

namespace extremal::gauss {

using certnum::EnclosureError;
using certnum::interval_exp;
using certnum::interval_log;
using certnum::interval_sqrt;
using certnum::lgamma_half;
using certnum::nudge_down;
using certnum::nudge_up;
using certnum::sqr;
using certnum::to_interval;

namespace {

// Exponent 2*alpha of the marginal density, as an exact interval.
Interval density_power(long long n, bool alt_exponent) {
  double num = static_cast<double>(alt_exponent ? n - 1 : n - 2);
  return Interval(num) / 2.0;
}

// phi(u) = alpha * log((1-u^2)/(1-c^2)) for a fixed double c; decreasing on
// [c, 1). Returns the enclosure of e^{phi(u)}, with the convention that the
// value at u >= 1 is exactly 0 (alpha > 0 there).
Interval peak_factored_value(double u, const Interval& alpha,
                             const Interval& denom) {
  if (u >= 1.0) return Interval(0.0);
  Interval num = Interval(1.0) - sqr(Interval(u));
  if (num.lo() <= 0.0) {
    // close enough to 1 that the enclosure touches 0: keep the upper bound
    Interval hi_ratio = Interval(num.hi()) / denom;
    Interval phi_hi = alpha * interval_log(hi_ratio);
    return Interval(0.0, interval_exp(phi_hi).hi());
  }
  Interval phi = alpha * interval_log(num / denom);
  return interval_exp(phi);
}

// Certified enclosure of log integral_{x0}^{1} (1-u^2)^alpha du for alpha > 0.
//
// Peak-factored as (1-c^2)^alpha * int e^{phi}, c = x0.hi(). The inner
// integrand f = e^{phi} is decreasing on [c, 1), so each cell admits a
// monotone Riemann enclosure; away from u = 1 a midpoint rule with an
// interval bound on f'' is far tighter, and the cheaper of the two bounds
// is chosen per cell.
Interval log_upper_tail_integral(const Interval& x0, const Interval& alpha) {
  const double c = x0.hi();
  if (!(c < 1.0) || !(x0.lo() > 0.0))
    throw EnclosureError("facet quadrature requires 0 < x0 < 1");
  Interval denom = Interval(1.0) - sqr(Interval(c));
  if (denom.lo() <= 0.0) throw EnclosureError("facet quadrature: x0 too close to 1");

  // Truncation point u1 (the choice is uncertified, the bounds are not):
  // smallest u with phi(u) <= -40 by double bisection, else 1.
  const double alpha_mid = alpha.mid();
  const double denom_mid = 1.0 - c * c;
  auto phi_plain = [&](double u) {
    return alpha_mid * std::log((1.0 - u * u) / denom_mid);
  };
  double u1 = 1.0;
  if (phi_plain(std::nextafter(1.0, 0.0)) < -40.0) {
    double lo = c, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      (phi_plain(mid) > -40.0 ? lo : hi) = mid;
    }
    u1 = hi;
  }

  // phi' = -2 alpha u/(1-u^2), phi'' = -2 alpha (1+u^2)/(1-u^2)^2;
  // |f''| <= (|phi''| + phi'^2) * sup_cell f.
  auto second_derivative_mag = [&](const Interval& u_iv, double f_sup) {
    Interval one_m = Interval(1.0) - sqr(u_iv);
    if (one_m.lo() <= 0.0) return -1.0;  // unusable; fall back to monotone
    Interval dphi = -2.0 * alpha * u_iv / one_m;
    Interval d2phi = -2.0 * alpha * (Interval(1.0) + sqr(u_iv)) / sqr(one_m);
    Interval amp = d2phi + sqr(dphi);
    double m = std::max(std::abs(amp.lo()), std::abs(amp.hi()));
    return nudge_up(m * f_sup);
  };

  double lower = 0.0, upper = 0.0;
  long cells = 1 << 12;
  const long max_cells = 1 << 17;
  while (true) {
    lower = 0.0;
    upper = 0.0;
    const double start = x0.lo();
    const double step = (u1 - start) / static_cast<double>(cells);
    double u_prev = start;
    Interval f_prev = peak_factored_value(u_prev, alpha, denom);
    const double f_start_hi = f_prev.hi();
    for (long i = 1; i <= cells; ++i) {
      double u = (i == cells) ? u1
                              : std::min(u1, start + step * static_cast<double>(i));
      if (u <= u_prev) continue;
      Interval w = Interval(u) - Interval(u_prev);
      Interval f = peak_factored_value(u, alpha, denom);

      double cell_lo = nudge_down(w.lo() * f.lo());
      double cell_hi = nudge_up(w.hi() * f_prev.hi());

      double d2 = second_derivative_mag(Interval(u_prev, u), f_prev.hi());
      if (d2 >= 0.0) {
        Interval fm = peak_factored_value(0.5 * (u_prev + u), alpha, denom);
        double e = nudge_up(pow_int(w, 3).hi() / 24.0 * d2);
        Interval mid_contrib = w * fm + Interval(-e, e);
        cell_lo = std::max(cell_lo, mid_contrib.lo());
        cell_hi = std::min(cell_hi, mid_contrib.hi());
      }
      lower = nudge_down(lower + cell_lo);
      upper = nudge_up(upper + cell_hi);
      u_prev = u;
      f_prev = f;
    }
    if (u1 < 1.0) upper = nudge_up(upper + nudge_up((1.0 - u1) * f_prev.hi()));
    // the true lower limit lies in [x0.lo, x0.hi]: discount that sliver
    lower = nudge_down(lower - nudge_up(x0.width() * f_start_hi));
    lower = std::max(lower, 0.0);
    if (upper <= 0.0) throw EnclosureError("facet quadrature produced empty mass");
    if (lower > 0.0 && (upper - lower) <= 1e-6 * lower) break;
    if (cells >= max_cells) break;
    cells *= 4;
  }
  if (lower <= 0.0)
    throw EnclosureError("facet quadrature could not bound the integral away from 0");

  Interval log_inner = interval_log(Interval(lower, upper));
  return alpha * interval_log(denom) + log_inner;
}

}  // namespace

Interval log_facet_escape_p(long long n, const Interval& rho, const Interval& r,
                            bool alt_exponent) {
  if (n < 3) throw EnclosureError("log_facet_escape_p requires n >= 3");
  if (!(rho.lo() > 0.0) || !(r.lo() > 0.0))
    throw EnclosureError("log_facet_escape_p requires rho > 0 and r > 0");
  Interval S = sqr(r) + sqr(rho);
  Interval x0 = rho / interval_sqrt(S);
  Interval alpha = density_power(n, alt_exponent);

  Interval log_num = log_upper_tail_integral(x0, alpha);
  // int_{-1}^{1} (1-u^2)^alpha du = sqrt(pi) Gamma(alpha+1)/Gamma(alpha+3/2);
  // for alpha = (n-2)/2 the gammas are Gamma(n/2) and Gamma((n+1)/2).
  Interval log_den;
  if (!alt_exponent) {
    log_den = interval_log(certnum::sqrt_pi_enclosure()) + lgamma_half(n) -
              lgamma_half(n + 1);
  } else {
    log_den = interval_log(certnum::sqrt_pi_enclosure()) + lgamma_half(n + 1) -
              lgamma_half(n + 2);
  }
  return log_num - log_den;
}

Interval facet_escape_p(long long n, const Interval& rho, const Interval& r,
                        bool alt_exponent) {
  if (n < 2) throw EnclosureError("facet_escape_p requires n >= 2");
  if (rho.lo() < 0.0 || r.lo() < 0.0)
    throw EnclosureError("facet_escape_p requires rho >= 0 and r >= 0");
  if (rho.hi() == 0.0) return Interval(0.5);  // symmetric density
  if (r.hi() == 0.0) return Interval(0.0);    // cap of zero measure
  if (n == 2 && !alt_exponent) {
    // flat marginal density: p = (1 - x0)/2
    Interval x0 = rho / interval_sqrt(sqr(r) + sqr(rho));
    return (Interval(1.0) - x0) / 2.0;
  }
  Interval logp = log_facet_escape_p(n, rho, r, alt_exponent);
  Interval p = interval_exp(logp);
  return Interval(std::max(0.0, p.lo()), std::min(0.5, p.hi()));
}

std::vector<AsymptoteRow> asymptote_check_p(const std::vector<long long>& n_list,
                                            const Rational& a, double w) {
  std::vector<AsymptoteRow> rows;
  rows.reserve(n_list.size());
  for (long long n : n_list) {
    if (n < 3) throw EnclosureError("asymptote_check_p requires n >= 3");
    NazarovParams params;
    params.n = n;
    params.a = a;
    Interval rho = params.rho();
    Interval r = interval_sqrt(Interval(static_cast<double>(n - 1))) + Interval(w);
    Interval log_ratio = log_facet_escape_p(n, rho, r) -
                         log_main_term_L(n, rho) -
                         to_interval(a * a) * Interval(w);
    AsymptoteRow row;
    row.n = n;
    row.ratio = interval_exp(log_ratio);
    row.deviation_sqrt_n =
        (row.ratio.mid() - 1.0) * std::sqrt(static_cast<double>(n));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace extremal::gauss
