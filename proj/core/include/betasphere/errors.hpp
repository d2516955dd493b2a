#pragma once

#include <stdexcept>
#include <string>

namespace betasphere {

// Bad arguments or malformed inputs (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Instance too large for the exact solver path; caller should switch to the
// entropic path or raise the cap.
class SizeCapError : public InputError {
 public:
  SizeCapError(const std::string& what, std::size_t requested, std::size_t cap)
      : InputError(what), requested_size(requested), size_cap(cap) {}
  std::size_t requested_size;
  std::size_t size_cap;
};

// Numerical breakdown: non-convergence, singular systems, failed resampling
// (CLI exit code 3). Carries the last residual when one is meaningful.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), last_residual(residual) {}
  double last_residual;
};

// Configuration with coincident points (determinant identically zero).
class DegenerateConfigurationError : public NumericalError {
 public:
  explicit DegenerateConfigurationError(const std::string& what)
      : NumericalError(what) {}
};

}  // namespace betasphere
