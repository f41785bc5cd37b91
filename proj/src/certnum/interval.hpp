#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace extremal::certnum {

// Raised when an enclosure cannot be produced (overflow, empty domain,
// non-finite operand). Certification code must never swallow it.
class EnclosureError : public std::runtime_error {
public:
  explicit EnclosureError(const std::string& what) : std::runtime_error(what) {}
};

inline double nudge_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double nudge_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Closed interval [lo, hi] of doubles with outward rounding: every operation
// returns an enclosure of the exact image of its operand enclosures.
//
// The platform rounding mode is never touched. Each endpoint is computed in
// round-to-nearest and then nudged one unit in the last place outward, which
// dominates the <= 0.5 ulp nearest-rounding error.
class Interval {
public:
  Interval() : lo_(0.0), hi_(0.0) {}
  explicit Interval(double point) : lo_(point), hi_(point) { check(); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw EnclosureError("interval endpoints out of order");
    check();
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool is_positive() const { return lo_ > 0.0; }
  bool is_nonnegative() const { return lo_ >= 0.0; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }

private:
  void check() const {
    if (std::isnan(lo_) || std::isnan(hi_))
      throw EnclosureError("NaN interval endpoint");
  }

  double lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

// x^2 as the image of the interval (tighter than x*x when x straddles 0).
Interval sqr(const Interval& x);

// Integer power by repeated squaring applied to the image-exact sqr.
Interval pow_int(const Interval& x, int k);

// ldexp with exact scaling where possible; endpoints widen on denormal loss.
Interval scale_pow2(const Interval& x, int k);

std::string to_string(const Interval& x);

}  // namespace extremal::certnum
