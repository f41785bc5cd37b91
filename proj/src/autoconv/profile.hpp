#pragma once

#include <vector>

#include "certnum/rational.hpp"

namespace extremal::autoconv {

using certnum::BigInt;
using certnum::Rational;

// Nonnegative step function on [-1/4, 1/4] with uniform cells: cell i covers
// [-1/4 + i*delta, -1/4 + (i+1)*delta), delta = (1/2)/cells.
struct StepProfile {
  int cells = 0;
  Rational delta;
  std::vector<Rational> values;

  static StepProfile from_values(std::vector<Rational> v);
  static StepProfile constant(int cells, const Rational& height = Rational(1));

  Rational mass() const;      // delta * sum v
  Rational sup_norm() const;  // max v
  bool is_zero() const;
};

struct AutoconvReport {
  StepProfile profile;
  Rational sup_conv;  // sup_x (f*f)(x) = delta * max_k sum_{i+j=k} v_i v_j
  Rational mass_sq;
  Rational ratio;     // sup_conv / mass_sq
  int argmax_knot = 0;  // k attaining the max
};

// Exact supremum of the autoconvolution: f*f is piecewise linear with knots
// at -1/2 + m*delta, and the knot values are delta * sum_{i+j=m-1} v_i v_j.
AutoconvReport autoconv_sup(const StepProfile& p);

// Pointwise (f*f)(x) for validation against the knot formula.
Rational autoconv_at(const StepProfile& p, const Rational& x);

struct YoungCheck {
  Rational lhs;       // ||eps * eps||_inf
  Rational product;   // ||eps||_inf * ||eps||_1
  Rational rhs_new;   // (1/2) ||eps||_inf^2
  Rational rhs_old;   // ||eps||_inf^2
  bool l1_half_linf;  // ||eps||_1 <= (1/2) ||eps||_inf, exact
  bool chain_holds;   // lhs <= product <= rhs_new <= rhs_old
};

YoungCheck refined_young_check(const StepProfile& eps);

// sigma = sqrt(2/c) from the autoconvolution constant.
double sigma_from_c(const Rational& c);

// b - 2/m - 1/(2 m^2), the chain arithmetic applied to an externally
// supplied quantized-class value b.
Rational chain_bound(const Rational& b, int m);

}  // namespace extremal::autoconv
