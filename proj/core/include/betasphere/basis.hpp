#pragma once

#include <Eigen/Dense>
#include <complex>

#include "betasphere/geometry.hpp"

namespace betasphere {

// L2(sigma)-orthonormal basis of the k-dimensional section space of O(k-1),
//   e_j(x) = sqrt(k C(k-1, j)) x^j,  j = 0..k-1,
// orthonormal under the weight (1 + |x|^2)^{-(k-1)}. Coefficients are carried
// as logs so k up to 4096 never overflows through the binomials.
//
// eval() returns the metric-weighted chart values
//   v_j(x) = e_j(x) (1 + |x|^2)^{-(k-1)/2},
// which satisfy sum_j |v_j(x)|^2 = k identically and stay bounded for any x.
// At infinity only v_{k-1} = sqrt(k) survives (phase fixed to 1).
class WeightedBasis {
 public:
  explicit WeightedBasis(int k);

  int k() const { return k_; }
  int dim() const { return k_; }

  // Weighted values v_j(x); the quantity every norm and determinant uses.
  Eigen::VectorXcd eval(std::complex<double> z) const;
  Eigen::VectorXcd eval(const SpherePoint& p) const;

  // Raw section values e_j(x) in the chart, no metric weight. Can overflow
  // only when the true value exceeds the double range.
  Eigen::VectorXcd eval_raw(std::complex<double> z) const;

 private:
  Eigen::VectorXcd eval_scaled(std::complex<double> z,
                               double half_log_weight) const;

  int k_;
  Eigen::VectorXd half_log_coeff_;  // 0.5 * log(k * C(k-1, j))
};

// Free-function form: raw e_j(x), j = 0..k-1.
Eigen::VectorXcd orthonormal_basis_eval(std::complex<double> x, int k);

}  // namespace betasphere
