#include "cube/walsh.hpp"

#include <bit>
#include <stdexcept>

namespace extremal::cube {

std::vector<Rational> walsh_spectrum(int m, int N) {
  if (m < 1) throw std::invalid_argument("walsh_spectrum: m >= 1 required");
  if (N < 1 || N > 14)
    throw std::invalid_argument("walsh_spectrum: 1 <= N <= 14 (enumeration budget)");

  RatPoly he2 = poly_mul(hermite(m).as_poly(), hermite(m).as_poly());
  EvenPolyRational P2 = even_form(he2);

  // F(x) depends on x only through the popcount; precompute per level.
  std::vector<Rational> by_level(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    Rational s2(BigInt(2 * k - N) * (2 * k - N), N);
    by_level[static_cast<std::size_t>(k)] = P2.eval_at_square(s2);
  }

  const std::size_t size = std::size_t{1} << N;
  std::vector<Rational> v(size);
  for (std::size_t x = 0; x < size; ++x)
    v[x] = by_level[static_cast<std::size_t>(std::popcount(x))];

  // in-place Walsh-Hadamard butterflies; normalization 2^-N at the end
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        Rational a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
  Rational norm(1, BigInt(1) << N);
  for (auto& c : v) c *= norm;
  return v;
}

int walsh_degree(int m, int N) {
  auto spec = walsh_spectrum(m, N);
  int deg = 0;
  for (std::size_t s = 0; s < spec.size(); ++s) {
    if (spec[s] != 0) deg = std::max(deg, static_cast<int>(std::popcount(s)));
  }
  return deg;
}

int max_odd_support(const std::vector<Rational>& spectrum) {
  int worst = -1;
  for (std::size_t s = 0; s < spectrum.size(); ++s) {
    int w = static_cast<int>(std::popcount(s));
    if (w % 2 == 1 && spectrum[s] != 0) worst = std::max(worst, w);
  }
  return worst;
}

}  // namespace extremal::cube
