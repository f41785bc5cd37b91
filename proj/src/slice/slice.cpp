#include "slice/slice.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace extremal::slice {

SliceIndex::SliceIndex(int n) : n_(n) {
  if (n < 4 || n % 2 != 0 || n > 14)
    throw std::invalid_argument("SliceIndex: n must be even with 4 <= n <= 14");
  const std::uint32_t limit = 1u << n;
  lookup_.assign(limit, 0);
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (std::popcount(m) == n / 2) {
      lookup_[m] = points_.size();
      points_.push_back(m);
    }
  }
}

std::vector<Rational> linear_form_values(const SliceIndex& slice,
                                         const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != slice.n())
    throw std::invalid_argument("coefficient vector length must equal n");
  Rational total = 0;
  for (const auto& ai : a) total += ai;
  std::vector<Rational> values(slice.size());
  for (std::size_t i = 0; i < slice.size(); ++i) {
    Rational masked = 0;
    std::uint32_t m = slice.mask(i);
    for (int j = 0; j < slice.n(); ++j) {
      if ((m >> j) & 1u) masked += a[static_cast<std::size_t>(j)];
    }
    values[i] = 2 * masked - total;  // sum of +-a_i
  }
  return values;
}

KhintchineReport khintchine_ratio(const SliceIndex& slice,
                                  const std::vector<Rational>& a) {
  bool all_zero = true;
  for (const auto& ai : a) {
    if (ai != 0) all_zero = false;
  }
  if (all_zero) throw std::invalid_argument("khintchine_ratio: zero coefficient vector");

  auto values = linear_form_values(slice, a);
  Rational sum_abs = 0, sum_sq = 0;
  for (const auto& v : values) {
    sum_abs += abs(v);
    sum_sq += v * v;
  }
  KhintchineReport rep;
  rep.n = slice.n();
  rep.a = a;
  Rational count(static_cast<long long>(slice.size()));
  rep.L1 = sum_abs / count;
  rep.L2_sq = sum_sq / count;
  rep.ratio = std::sqrt(Rational(rep.L1 * rep.L1 / rep.L2_sq).convert_to<double>());
  rep.c_n_sq = Rational(rep.n - 2, 2 * (rep.n - 1));
  rep.holds = rep.L1 * rep.L1 >= rep.c_n_sq * rep.L2_sq;
  rep.equality = rep.L1 * rep.L1 == rep.c_n_sq * rep.L2_sq;
  return rep;
}

std::vector<Rational> laplacian_apply(const SliceIndex& slice,
                                      const std::vector<Rational>& f) {
  if (f.size() != slice.size())
    throw std::invalid_argument("laplacian_apply: value vector length mismatch");
  const int n = slice.n();
  const Rational pairs(static_cast<long long>(n) * (n - 1) / 2);
  std::vector<Rational> out(slice.size());
  for (std::size_t idx = 0; idx < slice.size(); ++idx) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) acc += f[slice.transposed(idx, i, j)];
    }
    out[idx] = f[idx] - acc / pairs;
  }
  return out;
}

PoincareTriple poincare_check(const SliceIndex& slice,
                              const std::vector<Rational>& a) {
  auto s = linear_form_values(slice, a);
  std::vector<Rational> f(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) f[i] = abs(s[i]);
  auto Lf = laplacian_apply(slice, f);

  Rational count(static_cast<long long>(slice.size()));
  Rational mean = 0, mean_sq = 0, inner = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mean += f[i];
    mean_sq += f[i] * f[i];
    inner += f[i] * Lf[i];
  }
  mean /= count;
  mean_sq /= count;
  inner /= count;

  PoincareTriple t;
  const int n = slice.n();
  t.lhs = Rational(4, n) * (mean_sq - mean * mean);
  t.mid = inner;
  t.rhs = Rational(2, n - 1) * mean_sq;
  t.chain_holds = t.lhs <= t.mid && t.mid <= t.rhs;
  return t;
}

Rational pointwise_Lf_check(const SliceIndex& slice,
                            const std::vector<Rational>& a) {
  auto s = linear_form_values(slice, a);
  std::vector<Rational> f(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) f[i] = abs(s[i]);
  auto Lf = laplacian_apply(slice, f);

  const Rational bound(2, slice.n() - 1);
  Rational min_slack = bound * f[0] - Lf[0];
  for (std::size_t i = 1; i < f.size(); ++i) {
    Rational slack = bound * f[i] - Lf[i];
    if (slack < min_slack) min_slack = slack;
  }
  return min_slack;
}

Rational chi_d_norm(const SliceIndex& slice, int d) {
  if (d < 0 || 2 * d > slice.n())
    throw std::invalid_argument("chi_d_norm: 0 <= d <= n/2 required");
  Rational acc = 0;
  for (std::size_t i = 0; i < slice.size(); ++i) {
    long long prod = 1;
    for (int k = 0; k < d; ++k)
      prod *= slice.coord(i, 2 * k) - slice.coord(i, 2 * k + 1);
    acc += Rational(prod) * prod;
  }
  return acc / Rational(static_cast<long long>(slice.size()));
}

}  // namespace extremal::slice
