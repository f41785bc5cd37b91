#include "certnum/functions.hpp"

#include <array>
#include <cmath>

namespace extremal::certnum {

namespace {

// ---------------------------------------------------------------------------
// Double-double helpers (error-free transformations). Used only inside the
// exp kernel, where the quadrature margin requires endpoint images within
// 2 ulp. Each operation below carries a relative error <= 2^-104, far under
// the final 1-ulp outward nudge that makes the enclosure rigorous.
// ---------------------------------------------------------------------------

struct DD {
  double hi, lo;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_add_d(DD a, double b) {
  DD s = two_sum(a.hi, b);
  s.lo += a.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

// ln 2 split: hi is the nearest double, lo the correction. hi + lo matches
// ln 2 to ~2^-105; validated against the 100-digit oracle in the test suite.
constexpr double kLn2Hi = 0x1.62e42fefa39efp-1;
constexpr double kLn2Lo = 0x1.abc9e3b39803fp-56;
constexpr double kInvLn2 = 0x1.71547652b82fep+0;

// e^r for |r| <= 0.3547 via degree-17 Taylor in double-double.
// Lagrange remainder: |R| <= |r|^18/18! * e^|r| <= 2e-24.
DD exp_taylor_dd(DD r) {
  static const std::array<DD, 18> inv_fact = [] {
    std::array<DD, 18> c{};
    double f = 1.0;
    for (int i = 0; i < 18; ++i) {
      if (i > 1) f *= i;
      double hi = 1.0 / f;
      double lo = std::fma(-hi, f, 1.0) / f;
      c[static_cast<std::size_t>(i)] = {hi, lo};
    }
    return c;
  }();
  DD acc = inv_fact[17];
  for (int i = 16; i >= 0; --i) {
    acc = dd_add(dd_mul(acc, r), inv_fact[static_cast<std::size_t>(i)]);
  }
  return acc;
}

// Certified e^x for a point argument. Total non-rounding error (argument
// reduction + series remainder + dd accumulation) is < 1e-23 relative, so a
// single outward nudge past the final rounding covers it.
Interval exp_point(double x) {
  if (x == 0.0) return Interval(1.0);
  if (!std::isfinite(x)) throw EnclosureError("interval_exp of non-finite argument");
  if (x > 709.9) throw EnclosureError("interval_exp overflow: unrepresentable enclosure");
  if (x < -745.2) {
    // e^x is positive but below the denormal range.
    return Interval(0.0, std::numeric_limits<double>::denorm_min());
  }

  double kd = std::nearbyint(x * kInvLn2);
  int k = static_cast<int>(kd);
  DD kl = dd_mul_d({kLn2Hi, kLn2Lo}, kd);
  DD r = dd_add_d({-kl.hi, -kl.lo}, x);  // x - k*ln2, |r| <= 0.3547

  DD v = exp_taylor_dd(r);
  double v1 = v.hi + v.lo;
  Interval mantissa(nudge_down(v1), nudge_up(v1));
  return scale_pow2(mantissa, k);
}

// ln m on [sqrt(2)/2, sqrt(2)) via atanh series, plain interval arithmetic.
// t = (m-1)/(m+1), |t| <= 0.1716; tail after j = 13 is < 5e-24.
Interval log_mantissa(const Interval& m) {
  Interval t = (m - 1.0) / (m + 1.0);
  Interval u = sqr(t);
  Interval s(0.0);
  for (int j = 13; j >= 0; --j) {
    Interval coeff = Interval(1.0) / Interval(static_cast<double>(2 * j + 1));
    s = s * u + coeff;
  }
  Interval series = 2.0 * t * s;
  const double tail = 5e-24;
  return series + Interval(-tail, tail);
}

Interval log_point(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw EnclosureError("interval_log requires a positive finite argument");
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 0x1.6a09e667f3bcdp-1) {  // sqrt(2)/2
    m *= 2.0;
    e -= 1;
  }
  Interval lnm = log_mantissa(Interval(m));
  return lnm + Interval(static_cast<double>(e)) * ln2_enclosure();
}

// Largest double d with d <= sqrt(x); verified by exact rational comparison.
double sqrt_down(double x) {
  if (x == 0.0) return 0.0;
  double g = std::sqrt(x);
  Rational rx = rational_from_double(x);
  while (true) {
    Rational rg = rational_from_double(g);
    if (rg >= 0 && rg * rg <= rx) break;
    g = nudge_down(g);
  }
  return g;
}

double sqrt_up(double x) {
  if (x == 0.0) return 0.0;
  double g = std::sqrt(x);
  Rational rx = rational_from_double(x);
  while (true) {
    Rational rg = rational_from_double(g);
    if (rg * rg >= rx) break;
    g = nudge_up(g);
  }
  return g;
}

// Bernoulli numbers B_2 .. B_18 as exact rationals.
const std::array<Rational, 9>& bernoulli() {
  static const std::array<Rational, 9> b = {
      Rational(1, 6),   Rational(-1, 30),      Rational(1, 42),
      Rational(-1, 30), Rational(5, 66),       Rational(-691, 2730),
      Rational(7, 6),   Rational(-3617, 510),  Rational(43867, 798)};
  return b;
}

// Stirling series for ln Gamma(z), real z >= 10. The remainder after the
// B_16 term is bounded in magnitude by the first omitted term (B_18).
Interval lgamma_stirling(const Interval& z) {
  Interval lnz = interval_log(z);
  Interval half_ln_2pi = 0.5 * interval_log(2.0 * pi_enclosure());
  Interval acc = (z - 0.5) * lnz - z + half_ln_2pi;

  Interval z2 = sqr(z);
  Interval zpow = z;  // z^(2j-1)
  const auto& B = bernoulli();
  for (int j = 1; j <= 8; ++j) {
    Interval coeff = to_interval(B[static_cast<std::size_t>(j - 1)] /
                                 Rational(2 * j * (2 * j - 1)));
    acc = acc + coeff / zpow;
    zpow = zpow * z2;
  }
  // zpow is now z^17; remainder term uses B_18/(18*17*z^17).
  Interval rem_mag = to_interval(B[8] / Rational(18 * 17)) / zpow;
  double r = std::max(std::abs(rem_mag.lo()), std::abs(rem_mag.hi()));
  return acc + Interval(-r, r);
}

}  // namespace

Interval interval_exp(const Interval& x) {
  Interval lo = exp_point(x.lo());
  Interval hi = exp_point(x.hi());
  return Interval(lo.lo(), hi.hi());
}

Interval interval_log(const Interval& x) {
  if (!(x.lo() > 0.0)) throw EnclosureError("interval_log of non-positive interval");
  Interval lo = log_point(x.lo());
  Interval hi = log_point(x.hi());
  return Interval(lo.lo(), hi.hi());
}

Interval interval_sqrt(const Interval& x) {
  if (x.lo() < 0.0) throw EnclosureError("interval_sqrt of negative interval");
  return Interval(sqrt_down(x.lo()), sqrt_up(x.hi()));
}

const Interval& pi_enclosure() {
  // Nearest double below pi; validated against the oracle in tests.
  static const Interval v(0x1.921fb54442d18p+1, nudge_up(0x1.921fb54442d18p+1));
  return v;
}

const Interval& sqrt_pi_enclosure() {
  static const Interval v = interval_sqrt(pi_enclosure());
  return v;
}

const Interval& inv_sqrt_pi_enclosure() {
  static const Interval v = Interval(1.0) / sqrt_pi_enclosure();
  return v;
}

const Interval& sqrt_2pi_enclosure() {
  static const Interval v = interval_sqrt(2.0 * pi_enclosure());
  return v;
}

const Interval& ln2_enclosure() {
  static const Interval v(nudge_down(kLn2Hi + kLn2Lo), nudge_up(kLn2Hi + kLn2Lo));
  return v;
}

Interval lgamma_half(long long k) {
  if (k < 1) throw EnclosureError("lgamma_half requires k >= 1");
  if (k >= 20) {
    // z = k/2 >= 10; k/2 is exact in double.
    return lgamma_stirling(Interval(std::ldexp(static_cast<double>(k), -1)));
  }
  long long m = k / 2;
  if (k % 2 == 0) {
    // Gamma(m) = (m-1)!
    return interval_log(to_interval(Rational(factorial(static_cast<unsigned>(m - 1)))));
  }
  // Gamma(m + 1/2) = sqrt(pi) * (2m)! / (4^m m!)
  Rational q(factorial(static_cast<unsigned>(2 * m)),
             (BigInt(1) << (2 * m)) * factorial(static_cast<unsigned>(m)));
  return interval_log(to_interval(q)) + interval_log(sqrt_pi_enclosure());
}

}  // namespace extremal::certnum
