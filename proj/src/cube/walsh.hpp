#pragma once

#include <vector>

#include "cube/hermite.hpp"

namespace extremal::cube {

// Full Fourier-Walsh spectrum of F_{m,N} = He_m(S_N)^2 over {-1,1}^N in
// exact rationals: coefficient of chi_S at index given by the bitmask of S.
// Requires N <= 14 (2^N enumeration).
std::vector<Rational> walsh_spectrum(int m, int N);

// max{|S| : hat F(S) != 0}.
int walsh_degree(int m, int N);

// Largest odd |S| carrying a nonzero coefficient, -1 when none (parity check).
int max_odd_support(const std::vector<Rational>& spectrum);

}  // namespace extremal::cube
