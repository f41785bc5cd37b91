#pragma once

#include <vector>

namespace extremal::autoconv {

struct SidonCheck {
  bool is_g_sidon = false;
  int max_unordered = 0;  // worst representation count, unordered {a,b}, a <= b
  int max_ordered = 0;    // the ordered count, reported for comparison
  long long worst_sum = 0;
};

// Representation counting convention: unordered pairs {a, b} with a <= b,
// repetition allowed, so classical Sidon sets are exactly the g = 1 class.
SidonCheck sidon_check(const std::vector<long long>& set, int g);

inline bool is_g_sidon(const std::vector<long long>& set, int g) {
  return sidon_check(set, g).is_g_sidon;
}

struct BetaResult {
  int size = 0;
  std::vector<long long> witness;
};

// beta_g(n) = max{|A| : A subset of {1..n} is g-Sidon}, by depth-first
// search over increasing elements with representation-count pruning. n <= 30.
BetaResult beta_g(int n, int g);

}  // namespace extremal::autoconv
