#pragma once

#include <vector>

#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace extremal::gauss {

using certnum::Interval;
using certnum::Rational;

// p(r): probability that a uniform point x on S^n satisfies
// <(y,rho), x> > rho with |y| = r. Equals
//   int_{x0}^{1} (1-u^2)^{(n-2)/2} du / int_{-1}^{1} (1-u^2)^{(n-2)/2} du,
// x0 = rho / sqrt(r^2 + rho^2). Certified via a peak-factored monotone-cell
// quadrature of the numerator and closed-form gamma ratio denominator.
//
// alt_exponent switches the integrand power to (n-1)/2 for diagnostic
// comparison with the uncorrected form; certificates never use it.
Interval facet_escape_p(long long n, const Interval& rho, const Interval& r,
                        bool alt_exponent = false);

// log p(r); stays representable where p itself underflows (large n).
Interval log_facet_escape_p(long long n, const Interval& rho, const Interval& r,
                            bool alt_exponent = false);

struct AsymptoteRow {
  long long n = 0;
  Interval ratio;              // p(sqrt(n-1)+w) / (L(n,rho) e^{a^2 w})
  double deviation_sqrt_n = 0; // (ratio_mid - 1) * sqrt(n), fitted diagnostic
};

// Ratio table for the main-term upper bound at r = sqrt(n-1) + w.
std::vector<AsymptoteRow> asymptote_check_p(const std::vector<long long>& n_list,
                                            const Rational& a, double w);

}  // namespace extremal::gauss
