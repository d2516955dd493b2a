#pragma once

#include <Eigen/Dense>
#include <vector>

#include "betasphere/geometry.hpp"

namespace betasphere {

// Weighted atomic probability measure on the sphere. Weights are nonnegative
// and sum to 1 within 1e-12 (validated with compensated summation).
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<SpherePoint> atoms, Eigen::VectorXd weights);

  static DiscreteMeasure uniform(std::vector<SpherePoint> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<SpherePoint>& atoms() const { return atoms_; }
  const SpherePoint& atom(std::size_t i) const { return atoms_[i]; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }

 private:
  std::vector<SpherePoint> atoms_;
  Eigen::VectorXd weights_;
};

double kahan_sum(const Eigen::VectorXd& v);

}  // namespace betasphere
