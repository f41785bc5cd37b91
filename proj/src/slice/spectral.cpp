#include "slice/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::slice {

namespace {

constexpr double kClusterTol = 1e-9;

Eigen::MatrixXd laplacian_matrix(const SliceIndex& slice) {
  const int n = slice.n();
  const auto size = static_cast<Eigen::Index>(slice.size());
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(size, size);
  for (Eigen::Index idx = 0; idx < size; ++idx) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto other = static_cast<Eigen::Index>(
            slice.transposed(static_cast<std::size_t>(idx), i, j));
        L(idx, other) -= 1.0 / pairs;
      }
    }
  }
  return L;
}

}  // namespace

LaplacianEigen decompose_laplacian(const SliceIndex& slice) {
  const int n = slice.n();
  if (n > 10)
    throw std::invalid_argument("decompose_laplacian: n <= 10 (dense eigensolver budget)");

  // Minimum theoretical gap must dominate the clustering tolerance.
  for (int d = 0; d < n / 2; ++d) {
    Rational gap = level_eigenvalue(n, d + 1) - level_eigenvalue(n, d);
    if (gap <= Rational(1, 500000000))
      throw std::runtime_error("eigenvalue clusters would be ambiguous");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(slice));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");

  LaplacianEigen out;
  out.n = n;
  out.vectors = solver.eigenvectors();
  out.values = solver.eigenvalues();
  out.level_of.resize(static_cast<std::size_t>(out.values.size()), -1);
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    double v = out.values(i);
    int best_d = -1;
    double best_dev = kClusterTol;
    for (int d = 0; d <= n / 2; ++d) {
      double theo = certnum::to_interval(level_eigenvalue(n, d)).mid();
      double dev = std::abs(v - theo);
      if (dev < best_dev) {
        best_dev = dev;
        best_d = d;
      }
    }
    if (best_d < 0)
      throw std::runtime_error("numeric eigenvalue matches no theoretical level");
    out.level_of[static_cast<std::size_t>(i)] = best_d;
  }
  return out;
}

SpectrumReport laplacian_spectrum(int n) {
  SliceIndex slice(n);
  LaplacianEigen eigen = decompose_laplacian(slice);

  SpectrumReport rep;
  rep.n = n;
  rep.dimension = slice.size();
  for (int d = 0; d <= n / 2; ++d) {
    SpectrumLevel level;
    level.d = d;
    level.eigenvalue = level_eigenvalue(n, d);
    double theo = certnum::to_interval(level.eigenvalue).mid();
    for (Eigen::Index i = 0; i < eigen.values.size(); ++i) {
      if (eigen.level_of[static_cast<std::size_t>(i)] == d) {
        ++level.multiplicity;
        level.max_deviation =
            std::max(level.max_deviation, std::abs(eigen.values(i) - theo));
      }
    }
    rep.max_deviation = std::max(rep.max_deviation, level.max_deviation);
    rep.levels.push_back(level);
  }
  return rep;
}

std::vector<double> eigenlevel_masses(const LaplacianEigen& eigen,
                                      const std::vector<double>& f) {
  if (static_cast<Eigen::Index>(f.size()) != eigen.vectors.rows())
    throw std::invalid_argument("eigenlevel_masses: dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> fv(f.data(),
                                       static_cast<Eigen::Index>(f.size()));
  Eigen::VectorXd coords = eigen.vectors.transpose() * fv;
  std::vector<double> mass_sq(static_cast<std::size_t>(eigen.n) / 2 + 1, 0.0);
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    auto d = static_cast<std::size_t>(eigen.level_of[static_cast<std::size_t>(i)]);
    mass_sq[d] += coords(i) * coords(i);
  }
  std::vector<double> mass(mass_sq.size());
  for (std::size_t d = 0; d < mass.size(); ++d) mass[d] = std::sqrt(mass_sq[d]);
  return mass;
}

double evenness_check(const SliceIndex& slice, const LaplacianEigen& eigen,
                      const std::vector<Rational>& a) {
  auto s = linear_form_values(slice, a);
  std::vector<double> f(s.size());
  double norm_sq = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    f[i] = std::abs(s[i].convert_to<double>());
    norm_sq += f[i] * f[i];
  }
  if (norm_sq == 0.0) return 0.0;
  auto mass = eigenlevel_masses(eigen, f);
  double worst = 0.0;
  for (std::size_t d = 1; d < mass.size(); d += 2)
    worst = std::max(worst, mass[d] / std::sqrt(norm_sq));
  return worst;
}

}  // namespace extremal::slice
