#pragma once

#include <utility>

#include "cube/hermite.hpp"

namespace extremal::cube {

struct CubeNorms {
  Rational L1;     // E He_m(S_N)^2
  Rational L2_sq;  // E He_m(S_N)^4
};

// Exact norms of F_{m,N} = He_m(S_N)^2, S_N = (x_1+...+x_N)/sqrt(N), via the
// binomial law: S_N^2 takes value (2k-N)^2/N with weight C(N,k)/2^N.
CubeNorms cube_norms(int m, int N);

// ||F||_2 / ||F||_1 in floating point.
double cube_ratio(const CubeNorms& norms);

// E|f| and E f^2 for f = prod_j (1 + x_j) by direct enumeration; d <= 20.
std::pair<Rational, double> product_example_ratio(int d);

// max over m <= m_max of (cube ratio at a large fixed N)^{1/(2m)}; a valid
// lower bound for the optimal degree base by construction.
struct BaseLowerBound {
  double value = 0.0;
  int best_m = 0;
  int N_used = 0;
};
BaseLowerBound certified_base_lower(int m_max);

}  // namespace extremal::cube
