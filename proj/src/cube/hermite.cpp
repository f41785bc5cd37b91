#include "cube/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::cube {

HermitePoly hermite(int m) {
  if (m < 0) throw std::invalid_argument("hermite: m >= 0 required");
  std::vector<BigInt> prev = {1};      // He_0
  std::vector<BigInt> cur = {0, 1};    // He_1
  if (m == 0) return {0, prev};
  for (int k = 1; k < m; ++k) {
    // He_{k+1} = x He_k - k He_{k-1}
    std::vector<BigInt> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {m, cur};
}

Rational gaussian_moment(const RatPoly& p) {
  Rational acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 != 0 || p[i] == 0) continue;
    acc += p[i] * Rational(certnum::double_factorial_odd(static_cast<unsigned>(i / 2)));
  }
  return acc;
}

EvenPolyRational even_form(const RatPoly& p) {
  for (std::size_t i = 1; i < p.size(); i += 2) {
    if (p[i] != 0) throw std::invalid_argument("even_form: polynomial is not even");
  }
  EvenPolyRational e;
  e.coeffs_in_s.resize((p.size() + 1) / 2);
  for (std::size_t i = 0; i < p.size(); i += 2) e.coeffs_in_s[i / 2] = p[i];
  return e;
}

namespace {

double log2_bigint(const BigInt& x) {
  using boost::multiprecision::msb;
  if (x <= 0) throw std::invalid_argument("log2_bigint: positive argument required");
  unsigned top = msb(x);
  if (top <= 52) return std::log2(x.convert_to<double>());
  BigInt shifted = x >> (top - 52);
  return std::log2(shifted.convert_to<double>()) + static_cast<double>(top - 52);
}

double log2_rational(const Rational& r) {
  return log2_bigint(numerator(r)) - log2_bigint(denominator(r));
}

}  // namespace

MomentRatioReport gaussian_ratio_root(int m) {
  if (m < 1) throw std::invalid_argument("gaussian_ratio_root: m >= 1 required");
  RatPoly he = hermite(m).as_poly();
  RatPoly he2 = poly_mul(he, he);
  RatPoly he4 = poly_mul(he2, he2);

  MomentRatioReport rep;
  rep.m = m;
  rep.gaussian_L2_sq = gaussian_moment(he2);
  rep.gaussian_L4_4 = gaussian_moment(he4);
  double log2_ratio = 0.5 * log2_rational(rep.gaussian_L4_4) -
                      log2_rational(rep.gaussian_L2_sq);
  rep.ratio_sq = std::exp2(log2_ratio);
  rep.root = std::exp2(log2_ratio / (2.0 * m));
  return rep;
}

}  // namespace extremal::cube
