#include "certnum/interval.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>

namespace extremal::certnum {

namespace {

void require_finite(double x, const char* op) {
  if (!std::isfinite(x))
    throw EnclosureError(std::string("unrepresentable enclosure in ") + op);
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  double lo = nudge_down(a.lo() + b.lo());
  double hi = nudge_up(a.hi() + b.hi());
  require_finite(lo, "add");
  require_finite(hi, "add");
  return Interval(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  double lo = nudge_down(a.lo() - b.hi());
  double hi = nudge_up(a.hi() - b.lo());
  require_finite(lo, "sub");
  require_finite(hi, "sub");
  return Interval(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<double, 4> c = {a.lo() * b.lo(), a.lo() * b.hi(),
                                   a.hi() * b.lo(), a.hi() * b.hi()};
  double lo = nudge_down(*std::min_element(c.begin(), c.end()));
  double hi = nudge_up(*std::max_element(c.begin(), c.end()));
  require_finite(lo, "mul");
  require_finite(hi, "mul");
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(0.0)) throw EnclosureError("division by interval containing 0");
  const std::array<double, 4> c = {a.lo() / b.lo(), a.lo() / b.hi(),
                                   a.hi() / b.lo(), a.hi() / b.hi()};
  double lo = nudge_down(*std::min_element(c.begin(), c.end()));
  double hi = nudge_up(*std::max_element(c.begin(), c.end()));
  require_finite(lo, "div");
  require_finite(hi, "div");
  return Interval(lo, hi);
}

Interval sqr(const Interval& x) {
  double alo = std::abs(x.lo()), ahi = std::abs(x.hi());
  double big = std::max(alo, ahi);
  double small = x.contains(0.0) ? 0.0 : std::min(alo, ahi);
  double lo = small == 0.0 ? 0.0 : nudge_down(small * small);
  double hi = nudge_up(big * big);
  require_finite(hi, "sqr");
  return Interval(std::max(lo, 0.0), hi);
}

Interval pow_int(const Interval& x, int k) {
  if (k < 0) return Interval(1.0) / pow_int(x, -k);
  Interval acc(1.0);
  Interval base = x;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = sqr(base);
  }
  return acc;
}

Interval scale_pow2(const Interval& x, int k) {
  // ldexp is exact unless the result overflows or loses bits to denormals.
  constexpr double tiny = std::numeric_limits<double>::denorm_min();
  double lo = std::ldexp(x.lo(), k);
  double hi = std::ldexp(x.hi(), k);
  require_finite(hi, "scale_pow2");
  require_finite(lo, "scale_pow2");
  if (std::abs(lo) < std::numeric_limits<double>::min()) {
    lo = (lo == 0.0) ? (x.lo() < 0.0 ? -tiny : 0.0) : nudge_down(lo);
  }
  if (std::abs(hi) < std::numeric_limits<double>::min()) {
    hi = (hi == 0.0) ? (x.hi() > 0.0 ? tiny : 0.0) : nudge_up(hi);
  }
  return Interval(lo, hi);
}

std::string to_string(const Interval& x) {
  char buf[64];
  auto fmt = [&](double v) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
  };
  return "[" + fmt(x.lo()) + "," + fmt(x.hi()) + "]";
}

}  // namespace extremal::certnum
