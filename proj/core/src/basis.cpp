#include "betasphere/basis.hpp"

#include <cmath>

#include "betasphere/errors.hpp"

namespace betasphere {

WeightedBasis::WeightedBasis(int k) : k_(k) {
  if (k < 1) throw InputError("WeightedBasis: k must be >= 1");
  half_log_coeff_.resize(k);
  const double log_k = std::log(static_cast<double>(k));
  const double lg_k = std::lgamma(static_cast<double>(k));
  for (int j = 0; j < k; ++j) {
    // log C(k-1, j) = lgamma(k) - lgamma(j+1) - lgamma(k-j)
    const double log_binom =
        lg_k - std::lgamma(j + 1.0) - std::lgamma(static_cast<double>(k - j));
    half_log_coeff_[j] = 0.5 * (log_k + log_binom);
  }
}

Eigen::VectorXcd WeightedBasis::eval_scaled(std::complex<double> z,
                                            double half_log_weight) const {
  Eigen::VectorXcd v(k_);
  const double r2 = std::norm(z);
  if (r2 == 0.0) {
    v.setZero();
    v[0] = std::exp(half_log_coeff_[0] + half_log_weight);
    return v;
  }
  const double log_r = 0.5 * std::log(r2);
  const double theta = std::arg(z);
  const std::complex<double> rot = std::polar(1.0, theta);
  std::complex<double> phase(1.0, 0.0);
  for (int j = 0; j < k_; ++j) {
    const double mag =
        std::exp(half_log_coeff_[j] + j * log_r + half_log_weight);
    v[j] = mag * phase;
    // Renormalize the phase recurrence now and then; drift is ~k*eps.
    if ((j & 63) == 63)
      phase = std::polar(1.0, theta * (j + 1));
    else
      phase *= rot;
  }
  return v;
}

Eigen::VectorXcd WeightedBasis::eval(std::complex<double> z) const {
  const double r2 = std::norm(z);
  if (!std::isfinite(r2)) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(k_);
    v[k_ - 1] = std::sqrt(static_cast<double>(k_));
    return v;
  }
  return eval_scaled(z, -0.5 * (k_ - 1) * std::log1p(r2));
}

Eigen::VectorXcd WeightedBasis::eval(const SpherePoint& p) const {
  if (p.at_infinity()) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(k_);
    v[k_ - 1] = std::sqrt(static_cast<double>(k_));
    return v;
  }
  return eval(p.affine());
}

Eigen::VectorXcd WeightedBasis::eval_raw(std::complex<double> z) const {
  return eval_scaled(z, 0.0);
}

Eigen::VectorXcd orthonormal_basis_eval(std::complex<double> x, int k) {
  return WeightedBasis(k).eval_raw(x);
}

}  // namespace betasphere
