#include "betasphere/measure.hpp"

#include <cmath>

#include "betasphere/errors.hpp"

namespace betasphere {

double kahan_sum(const Eigen::VectorXd& v) {
  double sum = 0.0, c = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double y = v[i] - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

DiscreteMeasure::DiscreteMeasure(std::vector<SpherePoint> atoms,
                                 Eigen::VectorXd weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty() ||
      static_cast<Eigen::Index>(atoms_.size()) != weights_.size()) {
    throw InputError("DiscreteMeasure: atoms and weights must have equal "
                     "length >= 1");
  }
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0.0)) {
      throw InputError("DiscreteMeasure: negative weight at index " +
                       std::to_string(i));
    }
  }
  const double total = kahan_sum(weights_);
  if (std::abs(total - 1.0) > 1e-12) {
    throw InputError("DiscreteMeasure: weights sum to " +
                     std::to_string(total) + ", not 1 within 1e-12");
  }
}

DiscreteMeasure DiscreteMeasure::uniform(std::vector<SpherePoint> atoms) {
  if (atoms.empty()) throw InputError("DiscreteMeasure::uniform: no atoms");
  const double w = 1.0 / static_cast<double>(atoms.size());
  Eigen::VectorXd weights =
      Eigen::VectorXd::Constant(static_cast<Eigen::Index>(atoms.size()), w);
  // Pin the total to 1 exactly so the class invariant never depends on the
  // representability of 1/n.
  weights[weights.size() - 1] += 1.0 - kahan_sum(weights);
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

}  // namespace betasphere
