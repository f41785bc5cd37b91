#pragma once

#include <cstdint>
#include <vector>

#include "slice/slice.hpp"

namespace extremal::slice {

struct SearchResult {
  double best_ratio = 0.0;
  std::vector<double> best_a;
  double c_n = 0.0;                 // sqrt((n-2)/(2(n-1)))
  long long evaluations = 0;
  bool matches_extremizer = false;  // best within 1e-6 of c_n
};

// Multi-start minimization of E|sum a_i x_i| / sqrt(E|sum a_i x_i|^2) over
// unit coefficient vectors: coordinate descent on the piecewise-smooth
// objective plus a simplex-style polish of the best candidate. Restart 0 is
// the known extremizer (1,1,0,...,0); a block of restarts perturbs it; the
// rest are random directions with per-restart subseeds.
SearchResult optimality_search(const SliceIndex& slice, int restarts,
                               std::uint64_t seed);

}  // namespace extremal::slice
