#pragma once

#include <complex>
#include <cstdint>

namespace betasphere {

// Deterministic, platform-independent random stream (xoshiro256++ seeded via
// splitmix64). Experiments derive non-overlapping substreams with
// derive_stream_seed(seed, k, trial), so trials can run in any order or in
// parallel and still reproduce bit-identical results.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller (second value cached).
  double normal();

  // Re + i Im with independent N(0, 1/2) parts, so E|z|^2 = 1.
  std::complex<double> complex_gaussian();

  // Index in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

// Hash-split substream derivation: mixes (seed, a, b, c) through splitmix64.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace betasphere
