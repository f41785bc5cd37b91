#pragma once

#include <cstdint>
#include <vector>

#include "certnum/rational.hpp"

namespace extremal::slice {

using certnum::BigInt;
using certnum::Rational;

// Canonical enumeration of the middle slice: all x in {-1,1}^n with zero
// coordinate sum, ordered colexicographically on the +1 positions (which is
// ascending order of the +1 bitmask).
class SliceIndex {
public:
  explicit SliceIndex(int n);

  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  std::uint32_t mask(std::size_t i) const { return points_[i]; }
  std::size_t index_of(std::uint32_t mask) const { return lookup_[mask]; }

  // coordinate value of point i: +1 if bit j set, else -1
  int coord(std::size_t i, int j) const {
    return (points_[i] >> j) & 1u ? 1 : -1;
  }

  // index of the point with coordinates i <-> j swapped
  std::size_t transposed(std::size_t idx, int a, int b) const {
    std::uint32_t m = points_[idx];
    std::uint32_t bits = ((m >> a) ^ (m >> b)) & 1u;
    return bits ? lookup_[m ^ ((1u << a) | (1u << b))] : idx;
  }

private:
  int n_;
  std::vector<std::uint32_t> points_;
  std::vector<std::size_t> lookup_;
};

// Values of sum_i a_i x_i over the slice, exact.
std::vector<Rational> linear_form_values(const SliceIndex& slice,
                                         const std::vector<Rational>& a);

struct KhintchineReport {
  int n = 0;
  std::vector<Rational> a;
  Rational L1;              // E |sum a_i x_i|
  Rational L2_sq;           // E (sum a_i x_i)^2
  double ratio = 0.0;       // L1 / sqrt(L2_sq)
  Rational c_n_sq;          // (n-2) / (2(n-1))
  bool holds = false;       // exact: L1^2 >= c_n_sq * L2_sq
  bool equality = false;    // exact: L1^2 == c_n_sq * L2_sq
};

KhintchineReport khintchine_ratio(const SliceIndex& slice,
                                  const std::vector<Rational>& a);

// Lf = f - (1/C(n,2)) sum_{i<j} f^(i,j), exact on rational values.
std::vector<Rational> laplacian_apply(const SliceIndex& slice,
                                      const std::vector<Rational>& f);

struct PoincareTriple {
  Rational lhs;  // (4/n) Var(f)
  Rational mid;  // <f, Lf>
  Rational rhs;  // (2/(n-1)) ||f||_2^2
  bool chain_holds = false;
};

// Exact three-term chain for f = |sum a_i x_i|.
PoincareTriple poincare_check(const SliceIndex& slice,
                              const std::vector<Rational>& a);

// min over x of (2/(n-1)) f(x) - Lf(x); nonnegative by the pointwise bound.
Rational pointwise_Lf_check(const SliceIndex& slice,
                            const std::vector<Rational>& a);

// ||chi_d||_2^2 with chi_d = prod_{i=1}^{d} (x_{2i-1} - x_{2i}), exact.
Rational chi_d_norm(const SliceIndex& slice, int d);

}  // namespace extremal::slice
