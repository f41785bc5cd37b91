#include "autoconv/search.hpp"

#include <stdexcept>

namespace extremal::autoconv {

namespace {

struct SearchState {
  int cells;
  int m;
  unsigned long long budget;
  unsigned long long nodes = 0;
  bool complete = true;

  std::vector<long long> v;     // prefix heights
  std::vector<long long> conv;  // ordered-pair convolution counts of the prefix
  long long sum_v = 0;

  Rational best;
  std::vector<long long> best_v;

  bool leaf_update() {
    if (sum_v == 0) return false;
    long long max_conv = 0;
    for (long long c : conv) max_conv = std::max(max_conv, c);
    Rational ratio(BigInt(max_conv) * 2 * cells, BigInt(sum_v) * sum_v);
    if (ratio < best) {
      best = ratio;
      best_v = v;
      return true;
    }
    return false;
  }

  // ratio of any completion >= fixed-diagonal sup over maximal mass
  bool prune(int depth) const {
    long long max_conv = 0;
    for (long long c : conv) max_conv = std::max(max_conv, c);
    if (max_conv == 0) return false;
    long long max_mass = sum_v + static_cast<long long>(cells - depth) * m;
    Rational bound(BigInt(max_conv) * 2 * cells, BigInt(max_mass) * max_mass);
    return bound > best;
  }

  void dfs(int depth) {
    if (!complete) return;
    if (depth == cells) {
      leaf_update();
      return;
    }
    if (prune(depth)) return;
    for (long long h = 0; h <= m; ++h) {
      if (++nodes > budget) {
        complete = false;
        return;
      }
      v[static_cast<std::size_t>(depth)] = h;
      if (h != 0) {
        for (int i = 0; i < depth; ++i)
          conv[static_cast<std::size_t>(i + depth)] +=
              2 * v[static_cast<std::size_t>(i)] * h;
        conv[static_cast<std::size_t>(2 * depth)] += h * h;
        sum_v += h;
      }
      dfs(depth + 1);
      if (h != 0) {
        for (int i = 0; i < depth; ++i)
          conv[static_cast<std::size_t>(i + depth)] -=
              2 * v[static_cast<std::size_t>(i)] * h;
        conv[static_cast<std::size_t>(2 * depth)] -= h * h;
        sum_v -= h;
      }
      v[static_cast<std::size_t>(depth)] = 0;
    }
  }
};

}  // namespace

QuantizedSearchResult quantized_min(int cells, int m,
                                    unsigned long long node_budget) {
  if (cells < 1 || m < 1)
    throw std::invalid_argument("quantized_min: cells >= 1 and m >= 1 required");

  SearchState st;
  st.cells = cells;
  st.m = m;
  st.budget = node_budget;
  st.v.assign(static_cast<std::size_t>(cells), 0);
  st.conv.assign(static_cast<std::size_t>(2 * cells - 1), 0);

  // incumbent: the constant profile, ratio exactly 2
  st.best = Rational(2);
  st.best_v.assign(static_cast<std::size_t>(cells), m);

  st.dfs(0);

  QuantizedSearchResult res;
  res.cells = cells;
  res.levels = m;
  res.b_value = st.best;
  res.chain_bound_value = chain_bound(st.best, m);
  res.complete = st.complete;
  res.nodes = st.nodes;
  std::vector<Rational> heights;
  heights.reserve(st.best_v.size());
  for (long long h : st.best_v) heights.emplace_back(h);
  res.argmin = StepProfile::from_values(std::move(heights));
  return res;
}

}  // namespace extremal::autoconv
