#pragma once

#include <Eigen/Dense>
#include <vector>

#include "betasphere/geometry.hpp"
#include "betasphere/measure.hpp"

namespace betasphere {

enum class QuadratureGenerator { fibonacci_lattice, product_grid };

// Quasi-uniform discretization of the normalized area measure sigma.
// Weights are positive and sum to 1.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<SpherePoint> nodes, Eigen::VectorXd weights,
                 QuadratureGenerator generator);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<SpherePoint>& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  QuadratureGenerator generator() const { return generator_; }

  DiscreteMeasure as_measure() const;

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0, c = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double y = weights_[static_cast<Eigen::Index>(i)] * f(nodes_[i]) - c;
      const double t = acc + y;
      c = (t - acc) - y;
      acc = t;
    }
    return acc;
  }

 private:
  std::vector<SpherePoint> nodes_;
  Eigen::VectorXd weights_;
  QuadratureGenerator generator_;
};

// Golden-angle spiral with M equal-weight nodes; z offset by half a step so
// the poles are never hit.
QuadratureRule fibonacci_lattice(int M);

// Tensor grid: Gauss-Legendre in the polar cosine x uniform in azimuth.
// Spectrally accurate for smooth integrands.
QuadratureRule product_grid(int n_polar, int n_azimuth);

// Product grid that integrates weighted polynomial pairings of sections of
// O(k-1) exactly (degree <= k-1 in the polar cosine, Fourier modes < n_az).
QuadratureRule product_grid_for_degree(int k);

// Product grid with at least 64*k nodes, the default resolution for kernel
// integrals whose integrand varies at scale 1/sqrt(k).
QuadratureRule kernel_quadrature(int k);

// Nodes/weights for \int_{-1}^{1} f(x) dx (weights sum to 2).
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

}  // namespace betasphere
