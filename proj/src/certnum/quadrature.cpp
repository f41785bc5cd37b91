#include "certnum/quadrature.hpp"

#include <cmath>

namespace extremal::certnum {

QuadratureCert trapezoid_lower(const CertifiedIntegrand& f,
                               const std::string& integrand_id,
                               const Rational& A, const Rational& B, long m,
                               const Interval& M_bound) {
  if (m < 1) throw EnclosureError("trapezoid_lower requires m >= 1");
  if (!(A < B)) throw EnclosureError("trapezoid_lower requires A < B");
  if (M_bound.lo() < 0.0)
    throw EnclosureError("second-derivative bound must be nonnegative");

  const Rational h = (B - A) / m;

  Rational sum_lo = 0;
  Rational sum_hi = 0;
  for (long k = 0; k <= m; ++k) {
    Rational node = A + h * k;
    Interval fx = f(to_interval(node));
    if (!std::isfinite(fx.lo()) || !std::isfinite(fx.hi()))
      throw EnclosureError("certification failure: non-finite node value at w = " +
                           rational_string(node));
    Rational wlo = rational_from_double(fx.lo());
    Rational whi = rational_from_double(fx.hi());
    if (k == 0 || k == m) {
      wlo /= 2;
      whi /= 2;
    }
    sum_lo += wlo;
    sum_hi += whi;
  }

  QuadratureCert cert;
  cert.integrand_id = integrand_id;
  cert.domain_lo = A;
  cert.domain_hi = B;
  cert.step = h;
  cert.node_count = m;

  const Rational T_lo = h * sum_lo;
  const Rational T_hi = h * sum_hi;
  cert.trapezoid_sum = Interval(double_le(T_lo), double_ge(T_hi));
  cert.second_derivative_bound = M_bound;

  // J >= T - M * (B-A)/12 * h^2, with the correction taken at M.hi.
  const Rational correction =
      rational_from_double(M_bound.hi()) * (B - A) / 12 * h * h;
  cert.integral_lower = double_le(T_lo - correction);
  return cert;
}

}  // namespace extremal::certnum
