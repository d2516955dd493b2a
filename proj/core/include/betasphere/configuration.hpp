#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betasphere/geometry.hpp"
#include "betasphere/measure.hpp"

namespace betasphere {

enum class Provenance { matrix_model, mcmc, fekete_ascent, manual };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// One realization of the point process: an ordered tuple of k points on the
// sphere (N = k for the sphere model).
struct Configuration {
  std::vector<SpherePoint> points;
  int k = 0;
  double beta = 2.0;  // +infinity marks the Fekete limit
  Provenance provenance = Provenance::manual;
  std::uint64_t seed = 0;

  std::size_t size() const { return points.size(); }

  // Checks N == k and that no two points coincide exactly.
  void validate() const;

  // Uniform empirical measure (1/N) sum delta_{x_i}.
  DiscreteMeasure empirical() const;

  double min_pairwise_distance() const;
};

// Versioned JSON record {schema_version, k, beta, provenance, seed, points};
// points are [re, im] affine pairs or the string "inf". Doubles are written
// in shortest round-trip form, so serialize/parse is bit-exact.
std::string configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const std::string& text);

}  // namespace betasphere
