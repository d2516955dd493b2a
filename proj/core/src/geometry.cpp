#include "betasphere/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace betasphere {

SpherePoint SpherePoint::from_affine(std::complex<double> z) {
  SpherePoint p;
  const double r2 = std::norm(z);
  if (!std::isfinite(r2)) return infinity();
  const double s = 1.0 / (1.0 + r2);
  p.u_ = Eigen::Vector3d(2.0 * z.real() * s, 2.0 * z.imag() * s,
                         (r2 - 1.0) * s);
  p.z_ = z;
  p.inf_ = false;
  return p;
}

SpherePoint SpherePoint::from_chart(const ChartPoint& x) {
  return x.is_infinity ? infinity() : from_affine(x.z);
}

SpherePoint SpherePoint::infinity() {
  SpherePoint p;
  p.u_ = Eigen::Vector3d(0.0, 0.0, 1.0);
  p.z_ = {0.0, 0.0};
  p.inf_ = true;
  return p;
}

SpherePoint SpherePoint::from_unit(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (std::abs(n - 1.0) > 1e-9) {
    throw std::domain_error("SpherePoint::from_unit: vector norm " +
                            std::to_string(n) + " is not 1 within 1e-9");
  }
  SpherePoint p;
  p.u_ = v / n;
  const double denom = 1.0 - p.u_.z();
  // The exact north pole is the only point sent to infinity.
  if (denom <= 0.0) {
    p.u_ = Eigen::Vector3d(0.0, 0.0, 1.0);
    p.inf_ = true;
    return p;
  }
  p.z_ = std::complex<double>(p.u_.x() / denom, p.u_.y() / denom);
  p.inf_ = false;
  return p;
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
  return 0.5 * (p.unit_vector() - q.unit_vector()).norm();
}

double chordal_distance(std::complex<double> z, std::complex<double> w) {
  return std::abs(z - w) /
         std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

double chordal_distance(const ChartPoint& x, const ChartPoint& y) {
  if (x.is_infinity && y.is_infinity) return 0.0;
  if (x.is_infinity) return 1.0 / std::sqrt(1.0 + std::norm(y.z));
  if (y.is_infinity) return 1.0 / std::sqrt(1.0 + std::norm(x.z));
  return chordal_distance(x.z, y.z);
}

ChartPoint project(const SpherePoint& p) { return p.chart(); }

SpherePoint lift(const ChartPoint& x) { return SpherePoint::from_chart(x); }

SpherePoint lift(std::complex<double> z) {
  return SpherePoint::from_affine(z);
}

double fs_potential(std::complex<double> x) {
  return std::log1p(std::norm(x));
}

Rotation Rotation::random(RngStream& rng) {
  Eigen::Vector4d q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  while (q.norm() < 1e-12) {
    q = Eigen::Vector4d(rng.normal(), rng.normal(), rng.normal(),
                        rng.normal());
  }
  q.normalize();
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Eigen::Matrix3d m;
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return Rotation(m);
}

SpherePoint Rotation::apply(const SpherePoint& p) const {
  Eigen::Vector3d v = m_ * p.unit_vector();
  v.normalize();
  return SpherePoint::from_unit(v);
}

}  // namespace betasphere
