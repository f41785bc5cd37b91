#pragma once

#include "autoconv/profile.hpp"

namespace extremal::autoconv {

struct QuantizedSearchResult {
  int cells = 0;
  int levels = 0;               // m: heights range over {0, ..., m}
  Rational b_value;             // certified min ratio over the class
  Rational chain_bound_value;   // b_value - 2/m - 1/(2m^2)
  StepProfile argmin;
  bool complete = false;        // false iff the node budget ran out
  unsigned long long nodes = 0;
};

// Exact minimization of sup(f*f)/(int f)^2 over nonzero profiles with
// integer heights in {0,...,m} (the ratio is 0-homogeneous, so integer
// heights lose no generality within the quantized class). Depth-first
// search with certified rational pruning: a partial prefix lower-bounds the
// ratio via its already-fixed convolution diagonal against the maximal
// attainable mass. Exceeding the node budget yields best-found with
// complete = false, never presented as a certified minimum.
QuantizedSearchResult quantized_min(int cells, int m,
                                    unsigned long long node_budget = 50000000ULL);

}  // namespace extremal::autoconv
