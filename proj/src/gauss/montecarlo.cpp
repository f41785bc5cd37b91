#include "gauss/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::gauss {

double CounterRng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = next_uniform01();
  double u2 = next_uniform01();
  double m = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925287 * u2;
  spare_ = m * std::sin(a);
  have_spare_ = true;
  return m * std::cos(a);
}

namespace {

// <u, x> for x uniform on S^n and u = (r, 0, ..., 0, rho): draw the full
// (n+1)-dimensional Gaussian to normalize.
double dot_with_sphere_point(CounterRng& rng, long long n, double rho, double r) {
  double g0 = rng.next_normal();
  double norm_sq = g0 * g0;
  for (long long i = 1; i < n; ++i) {
    double g = rng.next_normal();
    norm_sq += g * g;
  }
  double gn = rng.next_normal();
  norm_sq += gn * gn;
  return (r * g0 + rho * gn) / std::sqrt(norm_sq);
}

McEstimate finish(long long hits, long long samples) {
  McEstimate e;
  e.samples = samples;
  e.frequency = static_cast<double>(hits) / static_cast<double>(samples);
  e.standard_error = std::sqrt(e.frequency * (1.0 - e.frequency) /
                               static_cast<double>(samples));
  return e;
}

}  // namespace

McEstimate mc_facet_membership(long long n, double rho, double r, long long N,
                               long long samples, std::uint64_t seed) {
  if (n < 2 || samples < 1 || N < 1)
    throw std::invalid_argument("mc_facet_membership: need n >= 2, N >= 1, samples >= 1");
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    CounterRng rng(seed, static_cast<std::uint64_t>(s));
    bool survives = true;
    for (long long j = 0; j + 1 < N && survives; ++j) {
      survives = dot_with_sphere_point(rng, n, rho, r) <= rho;
    }
    hits += survives ? 1 : 0;
  }
  return finish(hits, samples);
}

McEstimate mc_escape_frequency(long long n, double rho, double r,
                               long long samples, std::uint64_t seed) {
  if (n < 2 || samples < 1)
    throw std::invalid_argument("mc_escape_frequency: need n >= 2, samples >= 1");
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    CounterRng rng(seed, static_cast<std::uint64_t>(s));
    hits += dot_with_sphere_point(rng, n, rho, r) > rho ? 1 : 0;
  }
  return finish(hits, samples);
}

}  // namespace extremal::gauss
