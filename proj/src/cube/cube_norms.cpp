#include "cube/cube_norms.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::cube {

CubeNorms cube_norms(int m, int N) {
  if (m < 1 || N < 1) throw std::invalid_argument("cube_norms: m, N >= 1 required");
  RatPoly he = hermite(m).as_poly();
  RatPoly he2 = poly_mul(he, he);
  EvenPolyRational P2 = even_form(he2);
  EvenPolyRational P4 = even_form(poly_mul(he2, he2));

  BigInt two_N = BigInt(1) << N;
  Rational L1 = 0, L2 = 0;
  BigInt binom = 1;  // C(N, 0)
  for (int k = 0; k <= N; ++k) {
    Rational s2(BigInt(2 * k - N) * (2 * k - N), N);
    Rational w(binom, two_N);
    L1 += w * P2.eval_at_square(s2);
    L2 += w * P4.eval_at_square(s2);
    if (k < N) {
      binom *= N - k;
      binom /= k + 1;
    }
  }
  return {L1, L2};
}

double cube_ratio(const CubeNorms& norms) {
  return std::sqrt(norms.L2_sq.convert_to<double>()) / norms.L1.convert_to<double>();
}

std::pair<Rational, double> product_example_ratio(int d) {
  if (d < 0 || d > 20)
    throw std::invalid_argument("product_example_ratio: 0 <= d <= 20 (enumeration budget)");
  // f = prod (1 + x_j) has values in {0, 2^d}; sums fit in 64 bits for d <= 20
  std::uint64_t sum_abs = 0, sum_sq = 0;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::uint64_t v = 1;
    for (int j = 0; j < d && v != 0; ++j) v *= (mask >> j) & 1u ? 2u : 0u;
    sum_abs += v;
    sum_sq += v * v;
  }
  Rational L1(BigInt(sum_abs), BigInt(1) << d);
  Rational L2_sq(BigInt(sum_sq), BigInt(1) << d);
  return {L1, std::sqrt(L2_sq.convert_to<double>())};
}

BaseLowerBound certified_base_lower(int m_max) {
  if (m_max < 2) throw std::invalid_argument("certified_base_lower: m_max >= 2 required");
  BaseLowerBound best;
  for (int m = 1; m <= m_max; ++m) {
    int N = m <= 2 ? 2000 : (m <= 4 ? 600 : 200);
    CubeNorms norms = cube_norms(m, N);
    double root = std::pow(cube_ratio(norms), 1.0 / (2.0 * m));
    if (root > best.value) best = {root, m, N};
  }
  return best;
}

}  // namespace extremal::cube
