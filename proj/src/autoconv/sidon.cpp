#include "autoconv/sidon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace extremal::autoconv {

SidonCheck sidon_check(const std::vector<long long>& set, int g) {
  if (set.empty()) throw std::invalid_argument("sidon_check: nonempty set required");
  if (g < 1) throw std::invalid_argument("sidon_check: g >= 1 required");
  std::vector<long long> a(set);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  std::map<long long, int> unordered;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) ++unordered[a[i] + a[j]];
  }
  SidonCheck out;
  for (const auto& [sum, count] : unordered) {
    if (count > out.max_unordered) {
      out.max_unordered = count;
      out.worst_sum = sum;
    }
  }
  // ordered count of s: 2u - [s even and s/2 in A]
  for (const auto& [sum, count] : unordered) {
    bool diag = sum % 2 == 0 && std::binary_search(a.begin(), a.end(), sum / 2);
    out.max_ordered = std::max(out.max_ordered, 2 * count - (diag ? 1 : 0));
  }
  out.is_g_sidon = out.max_unordered <= g;
  return out;
}

namespace {

struct BetaSearch {
  int n;
  int g;
  std::vector<int> counts;       // representation count per sum
  std::vector<long long> chosen;
  BetaResult best;

  bool try_add(long long e) {
    for (long long a : chosen) {
      if (counts[static_cast<std::size_t>(a + e)] >= g) {
        // roll back the partial bumps
        for (long long b : chosen) {
          if (b == a) break;
          --counts[static_cast<std::size_t>(b + e)];
        }
        return false;
      }
      ++counts[static_cast<std::size_t>(a + e)];
    }
    if (counts[static_cast<std::size_t>(2 * e)] >= g) {
      for (long long b : chosen) --counts[static_cast<std::size_t>(b + e)];
      return false;
    }
    ++counts[static_cast<std::size_t>(2 * e)];
    chosen.push_back(e);
    return true;
  }

  void remove_last() {
    long long e = chosen.back();
    chosen.pop_back();
    --counts[static_cast<std::size_t>(2 * e)];
    for (long long a : chosen) --counts[static_cast<std::size_t>(a + e)];
  }

  void dfs(long long next) {
    if (static_cast<int>(chosen.size()) > best.size) {
      best.size = static_cast<int>(chosen.size());
      best.witness = chosen;
    }
    // even taking every remaining element cannot beat the incumbent
    if (static_cast<int>(chosen.size()) + (n - next + 1) <= best.size) return;
    for (long long e = next; e <= n; ++e) {
      if (try_add(e)) {
        dfs(e + 1);
        remove_last();
      }
    }
  }
};

}  // namespace

BetaResult beta_g(int n, int g) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("beta_g: 1 <= n <= 30 (exhaustive search budget)");
  if (g < 1) throw std::invalid_argument("beta_g: g >= 1 required");
  BetaSearch search;
  search.n = n;
  search.g = g;
  search.counts.assign(static_cast<std::size_t>(2 * n + 1), 0);
  search.dfs(1);
  return search.best;
}

}  // namespace extremal::autoconv
