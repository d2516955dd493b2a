#pragma once

#include <Eigen/Dense>
#include <complex>

#include "betasphere/rng.hpp"

namespace betasphere {

// Stereographic chart value: a finite complex coordinate or the point at
// infinity (image of the north pole under the fixed projection convention).
struct ChartPoint {
  std::complex<double> z{0.0, 0.0};
  bool is_infinity = false;

  static ChartPoint infinity() { return {{0.0, 0.0}, true}; }
};

// A point on the Riemann sphere, carried both as a unit vector in R^3 and as
// its stereographic coordinate. Projection is from the north pole (0,0,1),
// which maps the south pole to 0 and the north pole to infinity.
class SpherePoint {
 public:
  SpherePoint() : u_(0.0, 0.0, -1.0) {}  // south pole, affine 0

  static SpherePoint from_affine(std::complex<double> z);
  static SpherePoint from_chart(const ChartPoint& x);
  static SpherePoint infinity();
  // Throws std::domain_error if |v| deviates from 1 by more than 1e-9;
  // otherwise renormalizes so the stored vector is unit to machine precision.
  static SpherePoint from_unit(const Eigen::Vector3d& v);

  const Eigen::Vector3d& unit_vector() const { return u_; }
  ChartPoint chart() const { return {z_, inf_}; }
  std::complex<double> affine() const { return z_; }  // valid when finite
  bool at_infinity() const { return inf_; }

 private:
  Eigen::Vector3d u_;
  std::complex<double> z_{0.0, 0.0};
  bool inf_ = false;
};

// Chordal metric with the sphere normalized to diameter 1:
//   d(z, w) = |z - w| / sqrt((1+|z|^2)(1+|w|^2)) in [0, 1],
// extended continuously to infinity; equals half the Euclidean distance of
// the unit vectors.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);
double chordal_distance(const ChartPoint& x, const ChartPoint& y);
double chordal_distance(std::complex<double> z, std::complex<double> w);

ChartPoint project(const SpherePoint& p);
SpherePoint lift(const ChartPoint& x);
SpherePoint lift(std::complex<double> z);

// Fubini-Study potential of O(1) in the affine chart: log(1 + |x|^2).
double fs_potential(std::complex<double> x);

// An element of SO(3), acting on sphere points. Isometry of the chordal
// metric and of the Fubini-Study measure; used for invariance checks.
class Rotation {
 public:
  explicit Rotation(const Eigen::Matrix3d& m) : m_(m) {}
  static Rotation random(RngStream& rng);  // Haar via normalized quaternion
  SpherePoint apply(const SpherePoint& p) const;
  const Eigen::Matrix3d& matrix() const { return m_; }

 private:
  Eigen::Matrix3d m_;
};

}  // namespace betasphere
