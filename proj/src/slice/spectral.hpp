#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slice/slice.hpp"

namespace extremal::slice {

// Theoretical Laplacian eigenvalue at level d: 2d(n+1-d)/(n(n-1)).
inline Rational level_eigenvalue(int n, int d) {
  return Rational(2LL * d * (n + 1 - d), static_cast<long long>(n) * (n - 1));
}

// Multiplicity of level d: C(n,d) - C(n,d-1).
inline BigInt level_multiplicity(int n, int d) {
  return certnum::binomial(static_cast<unsigned>(n), static_cast<unsigned>(d)) -
         (d >= 1 ? certnum::binomial(static_cast<unsigned>(n),
                                     static_cast<unsigned>(d - 1))
                 : BigInt(0));
}

struct SpectrumLevel {
  int d = 0;
  Rational eigenvalue;      // exact theoretical value labelling the cluster
  int multiplicity = 0;     // observed cluster size
  double max_deviation = 0; // worst |numeric - theoretical| in the cluster
};

struct SpectrumReport {
  int n = 0;
  std::vector<SpectrumLevel> levels;
  std::size_t dimension = 0;  // sum of multiplicities = C(n, n/2)
  double max_deviation = 0;
};

// Dense symmetric eigendecomposition of L with eigenvalue clustering at
// tolerance 1e-9. Rejects instances where two theoretical eigenvalues are
// closer than twice the tolerance (cannot happen for n <= 10).
SpectrumReport laplacian_spectrum(int n);

// Eigendecomposition with cluster labels, for projections.
struct LaplacianEigen {
  int n = 0;
  Eigen::MatrixXd vectors;       // columns = eigenvectors
  Eigen::VectorXd values;
  std::vector<int> level_of;     // column -> d
};

LaplacianEigen decompose_laplacian(const SliceIndex& slice);

// Euclidean mass of f in each eigenlevel: mass[d] = ||P_d f||.
std::vector<double> eigenlevel_masses(const LaplacianEigen& eigen,
                                      const std::vector<double>& f);

// max over odd d of ||P_d f|| / ||f|| for f = |sum a_i x_i|.
double evenness_check(const SliceIndex& slice, const LaplacianEigen& eigen,
                      const std::vector<Rational>& a);

}  // namespace extremal::slice
