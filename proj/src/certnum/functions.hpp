#pragma once

#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace extremal::certnum {

// Certified enclosures of elementary functions. exp/log/sqrt are evaluated
// from argument-reduced series with explicit Lagrange remainders; no libm
// result is trusted without verification.

// Enclosure of e^t for all t in x. Width <= 2 ulp per endpoint image.
// Throws EnclosureError if the upper endpoint overflows.
Interval interval_exp(const Interval& x);

// Enclosure of ln t for all t in x; requires x.lo() > 0.
Interval interval_log(const Interval& x);

// Enclosure of sqrt(t); endpoints verified by exact rational comparison.
Interval interval_sqrt(const Interval& x);

// Fundamental constants as tight two-ulp enclosures.
const Interval& pi_enclosure();
const Interval& sqrt_pi_enclosure();
const Interval& inv_sqrt_pi_enclosure();
const Interval& sqrt_2pi_enclosure();
const Interval& ln2_enclosure();

// ln Gamma(k/2) for integer k >= 1. Exact factorial / half-integer formulas
// below z = 10, Stirling with an explicit remainder bound above.
Interval lgamma_half(long long k);

}  // namespace extremal::certnum
