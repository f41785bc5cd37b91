#include "slice/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gauss/montecarlo.hpp"

namespace extremal::slice {

namespace {

using gauss::CounterRng;

class RatioObjective {
public:
  explicit RatioObjective(const SliceIndex& slice) : n_(slice.n()) {
    masks_.reserve(slice.size());
    for (std::size_t i = 0; i < slice.size(); ++i) masks_.push_back(slice.mask(i));
  }

  double operator()(const std::vector<double>& a) const {
    double total = 0;
    for (double v : a) total += v;
    double sum_abs = 0, sum_sq = 0;
    for (std::uint32_t m : masks_) {
      double masked = 0;
      for (int j = 0; j < n_; ++j) {
        if ((m >> j) & 1u) masked += a[static_cast<std::size_t>(j)];
      }
      double s = 2 * masked - total;
      sum_abs += std::abs(s);
      sum_sq += s * s;
    }
    if (sum_sq <= 0) return 1.0;  // zero vector: treated as worst case
    double count = static_cast<double>(masks_.size());
    return (sum_abs / count) / std::sqrt(sum_sq / count);
  }

  int n() const { return n_; }

private:
  int n_;
  std::vector<std::uint32_t> masks_;
};

void normalize(std::vector<double>& a) {
  double norm = 0;
  for (double v : a) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0) {
    for (double& v : a) v /= norm;
  }
}

double coordinate_descent(const RatioObjective& f, std::vector<double>& a,
                          long long& evals) {
  double best = f(a);
  ++evals;
  double step = 0.25;
  for (int sweep = 0; sweep < 60 && step > 1e-9; ++sweep) {
    bool improved = false;
    for (int i = 0; i < f.n(); ++i) {
      for (double dir : {+1.0, -1.0}) {
        std::vector<double> cand = a;
        cand[static_cast<std::size_t>(i)] += dir * step;
        normalize(cand);
        double v = f(cand);
        ++evals;
        if (v < best - 1e-14) {
          best = v;
          a = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

// Nelder-Mead polish on the sphere (renormalizing each vertex).
double simplex_polish(const RatioObjective& f, std::vector<double>& a,
                      long long& evals) {
  const int n = f.n();
  std::vector<std::vector<double>> verts;
  std::vector<double> vals;
  verts.push_back(a);
  for (int i = 0; i < n; ++i) {
    auto v = a;
    v[static_cast<std::size_t>(i)] += 0.05;
    normalize(v);
    verts.push_back(v);
  }
  for (auto& v : verts) {
    vals.push_back(f(v));
    ++evals;
  }
  for (int iter = 0; iter < 400; ++iter) {
    std::size_t worst = 0, best = 0;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      if (vals[i] > vals[worst]) worst = i;
      if (vals[i] < vals[best]) best = i;
    }
    if (vals[worst] - vals[best] < 1e-13) break;
    std::vector<double> centroid(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i == worst) continue;
      for (int j = 0; j < n; ++j)
        centroid[static_cast<std::size_t>(j)] += verts[i][static_cast<std::size_t>(j)];
    }
    for (double& c : centroid) c /= static_cast<double>(verts.size() - 1);

    auto try_point = [&](double t) {
      std::vector<double> p(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        auto js = static_cast<std::size_t>(j);
        p[js] = centroid[js] + t * (centroid[js] - verts[worst][js]);
      }
      normalize(p);
      return p;
    };
    auto reflect = try_point(1.0);
    double fr = f(reflect);
    ++evals;
    if (fr < vals[best]) {
      auto expand = try_point(2.0);
      double fe = f(expand);
      ++evals;
      if (fe < fr) {
        verts[worst] = expand;
        vals[worst] = fe;
      } else {
        verts[worst] = reflect;
        vals[worst] = fr;
      }
    } else if (fr < vals[worst]) {
      verts[worst] = reflect;
      vals[worst] = fr;
    } else {
      auto contract = try_point(-0.5);
      double fc = f(contract);
      ++evals;
      if (fc < vals[worst]) {
        verts[worst] = contract;
        vals[worst] = fc;
      } else {
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (i == best) continue;
          for (int j = 0; j < n; ++j) {
            auto js = static_cast<std::size_t>(j);
            verts[i][js] = 0.5 * (verts[i][js] + verts[best][js]);
          }
          normalize(verts[i]);
          vals[i] = f(verts[i]);
          ++evals;
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (vals[i] < vals[best]) best = i;
  }
  a = verts[best];
  return vals[best];
}

// tie-break key: sorted |a| descending, compared lexicographically
std::vector<double> tie_key(const std::vector<double>& a) {
  std::vector<double> key(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) key[i] = std::abs(a[i]);
  std::sort(key.rbegin(), key.rend());
  return key;
}

}  // namespace

SearchResult optimality_search(const SliceIndex& slice, int restarts,
                               std::uint64_t seed) {
  if (slice.n() > 12)
    throw std::invalid_argument("optimality_search: n <= 12 required");
  if (restarts < 1) throw std::invalid_argument("optimality_search: restarts >= 1");

  const int n = slice.n();
  RatioObjective objective(slice);
  SearchResult result;
  result.c_n = std::sqrt(static_cast<double>(n - 2) / (2.0 * (n - 1)));

  for (int restart = 0; restart < restarts; ++restart) {
    CounterRng rng(seed, static_cast<std::uint64_t>(restart));
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    if (restart == 0) {
      a[0] = a[1] = 1.0;
    } else if (restart % 3 == 1) {
      // perturbed extremizer
      a[0] = a[1] = 1.0;
      for (double& v : a) v += 0.1 * rng.next_normal();
    } else {
      for (double& v : a) v = rng.next_normal();
    }
    normalize(a);

    double best = coordinate_descent(objective, a, result.evaluations);
    if (restart == 0 || best < result.best_ratio + 1e-9) {
      double polished = simplex_polish(objective, a, result.evaluations);
      best = std::min(best, polished);
    }
    if (result.best_a.empty() || best < result.best_ratio - 1e-12 ||
        (std::abs(best - result.best_ratio) <= 1e-12 &&
         tie_key(a) < tie_key(result.best_a))) {
      result.best_ratio = best;
      result.best_a = a;
    }
  }
  result.matches_extremizer = std::abs(result.best_ratio - result.c_n) <= 1e-6;
  return result;
}

}  // namespace extremal::slice
