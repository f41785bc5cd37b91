#pragma once

#include <functional>
#include <string>

#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace extremal::certnum {

// Certificate for a lower bound on int_A^B f produced by the composite
// trapezoidal rule together with the textbook error bound
//   |J - T| <= (B-A)/12 * h^2 * sup|f''|.
struct QuadratureCert {
  std::string integrand_id;
  Rational domain_lo;
  Rational domain_hi;
  Rational step;                      // h = (B-A)/m, exact
  long node_count = 0;                // m
  Interval trapezoid_sum;             // T
  Interval second_derivative_bound;   // M, caller-certified sup|f''|
  double integral_lower = 0.0;        // J_lo = T.lo - M.hi * (B-A)/12 * h^2
};

using CertifiedIntegrand = std::function<Interval(const Interval&)>;

// Composite trapezoid evaluated in interval arithmetic. Nodes are exact
// rationals A + k*h; endpoint sums are accumulated exactly in rational
// arithmetic (order-free) and rounded outward once, so the only enclosure
// loss is the per-node width of f. A non-finite node evaluation aborts
// certification rather than propagating silently.
QuadratureCert trapezoid_lower(const CertifiedIntegrand& f,
                               const std::string& integrand_id,
                               const Rational& A, const Rational& B, long m,
                               const Interval& M_bound);

}  // namespace extremal::certnum
