#pragma once

#include <cstdint>

namespace extremal::gauss {

// Counter-based deterministic stream: value(i) depends only on (seed, i).
// Monte Carlo results are diagnostics and never enter a certificate.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(seed ^ 0x8f5c2d6aa3b10e47ULL, stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  double next_uniform01() {  // (0, 1]
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // standard normal via Box-Muller; one value per call, pair cached
  double next_normal();

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return finalize(finalize(a + 0x9e3779b97f4a7c15ULL * (b + 1)) ^ b);
  }

private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct McEstimate {
  double frequency = 0.0;
  double standard_error = 0.0;
  long long samples = 0;
};

// Frequency of a fixed point (y, rho), |y| = r, surviving N-1 independent
// uniform half-space constraints <(y,rho), x> <= rho on S^n. Compares
// against (1 - p(r))^{N-1}.
McEstimate mc_facet_membership(long long n, double rho, double r, long long N,
                               long long samples, std::uint64_t seed);

// Frequency of the single-constraint event <(y,rho)/|(y,rho)|, x> > rho/|(y,rho)|,
// i.e. a direct Monte Carlo estimate of p(r).
McEstimate mc_escape_frequency(long long n, double rho, double r,
                               long long samples, std::uint64_t seed);

}  // namespace extremal::gauss
