#include "betasphere/quadrature.hpp"

#include <cmath>

#include "betasphere/errors.hpp"

namespace betasphere {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

QuadratureRule::QuadratureRule(std::vector<SpherePoint> nodes,
                               Eigen::VectorXd weights,
                               QuadratureGenerator generator)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      generator_(generator) {
  if (nodes_.empty() ||
      static_cast<Eigen::Index>(nodes_.size()) != weights_.size()) {
    throw InputError("QuadratureRule: nodes/weights length mismatch");
  }
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0)) {
      throw InputError("QuadratureRule: weights must be positive");
    }
  }
  // Normalize so the rule integrates 1 to 1 exactly.
  weights_ /= kahan_sum(weights_);
  weights_[weights_.size() - 1] += 1.0 - kahan_sum(weights_);
}

DiscreteMeasure QuadratureRule::as_measure() const {
  return DiscreteMeasure(nodes_, weights_);
}

QuadratureRule fibonacci_lattice(int M) {
  if (M < 1) throw InputError("fibonacci_lattice: M must be >= 1");
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  std::vector<SpherePoint> nodes;
  nodes.reserve(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    const double z = -1.0 + (2.0 * i + 1.0) / M;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = golden_angle * i;
    nodes.push_back(SpherePoint::from_unit(
        Eigen::Vector3d(r * std::cos(theta), r * std::sin(theta), z)));
  }
  Eigen::VectorXd w = Eigen::VectorXd::Constant(M, 1.0 / M);
  return QuadratureRule(std::move(nodes), std::move(w),
                        QuadratureGenerator::fibonacci_lattice);
}

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw InputError("gauss_legendre: n must be >= 1");
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guess; the usual
  // symmetric construction, good to machine precision for n into the
  // thousands.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureRule product_grid(int n_polar, int n_azimuth) {
  if (n_polar < 1 || n_azimuth < 1) {
    throw InputError("product_grid: grid sizes must be >= 1");
  }
  Eigen::VectorXd gl_nodes, gl_weights;
  gauss_legendre(n_polar, gl_nodes, gl_weights);
  std::vector<SpherePoint> nodes;
  nodes.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
  Eigen::VectorXd w(static_cast<Eigen::Index>(n_polar) * n_azimuth);
  Eigen::Index idx = 0;
  for (int i = 0; i < n_polar; ++i) {
    const double z = gl_nodes[i];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    // sigma = dz dphi / (4 pi): GL weight / 2 times 1/n_az.
    const double wi = gl_weights[i] / (2.0 * n_azimuth);
    for (int j = 0; j < n_azimuth; ++j) {
      const double phi = 2.0 * kPi * j / n_azimuth;
      nodes.push_back(SpherePoint::from_unit(
          Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), z)));
      w[idx++] = wi;
    }
  }
  return QuadratureRule(std::move(nodes), std::move(w),
                        QuadratureGenerator::product_grid);
}

QuadratureRule product_grid_for_degree(int k) {
  if (k < 1) throw InputError("product_grid_for_degree: k must be >= 1");
  return product_grid(k + 1, 2 * k + 1);
}

QuadratureRule kernel_quadrature(int k) {
  if (k < 1) throw InputError("kernel_quadrature: k must be >= 1");
  const int n_polar = static_cast<int>(std::ceil(std::sqrt(32.0 * k)));
  const int n_az = 2 * n_polar + 1;
  return product_grid(n_polar, n_az);
}

}  // namespace betasphere
