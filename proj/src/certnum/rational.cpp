#include "certnum/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::certnum {

namespace {

Rational parse_decimal(const std::string& text) {
  // [sign] digits [. digits] [e exp]
  std::size_t epos = text.find_first_of("eE");
  std::string mant = text.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string::npos) exp10 = std::stol(text.substr(epos + 1));

  bool neg = false;
  std::size_t i = 0;
  if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
    neg = mant[i] == '-';
    ++i;
  }
  BigInt digits = 0;
  bool seen_digit = false;
  long frac_digits = 0;
  bool in_frac = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.') {
      if (in_frac) throw std::invalid_argument("malformed number: " + text);
      in_frac = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (in_frac) ++frac_digits;
      seen_digit = true;
    } else {
      throw std::invalid_argument("malformed number: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: " + text);

  Rational r(digits);
  long net = exp10 - frac_digits;
  BigInt p10 = 1;
  for (long k = 0; k < std::abs(net); ++k) p10 *= 10;
  if (net >= 0)
    r *= p10;
  else
    r /= p10;
  return neg ? -r : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    return parse_decimal(text);
  }
  return Rational(BigInt(text));
}

std::string rational_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 2^53 * m is an exact integer.
  BigInt mant = static_cast<long long>(std::ldexp(m, 53));
  int e2 = exp - 53;
  Rational r(mant);
  if (e2 >= 0) {
    r *= Rational(BigInt(1) << e2);
  } else {
    r /= Rational(BigInt(1) << -e2);
  }
  return r;
}

namespace {

// convert_to<double> has no contractual rounding direction; correct by exact
// comparison, which terminates after at most a couple of 1-ulp steps.
double approx_double(const Rational& r) {
  double d = r.convert_to<double>();
  if (!std::isfinite(d)) throw EnclosureError("rational outside double range");
  return d;
}

}  // namespace

double double_le(const Rational& r) {
  double d = approx_double(r);
  while (rational_from_double(d) > r) d = nudge_down(d);
  while (true) {
    double up = nudge_up(d);
    if (!std::isfinite(up) || rational_from_double(up) > r) break;
    d = up;
  }
  return d;
}

double double_ge(const Rational& r) {
  double d = approx_double(r);
  while (rational_from_double(d) < r) d = nudge_up(d);
  while (true) {
    double dn = nudge_down(d);
    if (rational_from_double(dn) < r) break;
    d = dn;
  }
  return d;
}

Interval to_interval(const Rational& r) { return Interval(double_le(r), double_ge(r)); }

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt double_factorial_odd(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i < 2 * k; i += 2) r *= i;
  return r;
}

}  // namespace extremal::certnum
