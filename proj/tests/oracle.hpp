#pragma once

// Test-side high-precision oracle, independent of the certified interval path.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace extremal::testing {

using BF = boost::multiprecision::cpp_bin_float_100;

inline BF to_bf(const certnum::Rational& r) {
  return BF(numerator(r)) / BF(denominator(r));  // ADL into boost::multiprecision
}

inline bool encloses(const certnum::Interval& iv, const BF& value) {
  return BF(iv.lo()) <= value && value <= BF(iv.hi());
}

// Deterministic 64-bit stream for reproducible property tests.
class SplitMix {
public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi)
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }
  long long integer(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

}  // namespace extremal::testing
