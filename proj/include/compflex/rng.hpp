#pragma once

#include <cstdint>
#include <random>

namespace compflex {

// Seeded random stream with explicit (stream, substream) addressing so that
// every Monte Carlo drop draws from its own independent generator regardless
// of evaluation order. The variate transforms are written out here instead of
// using <random> distributions because the standard leaves those
// implementation-defined; this keeps byte-identical output across toolchains.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : RngStream(seed, 0, 0) {}

  RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer in [0, n), n > 0. Rejection keeps it unbiased.
  std::uint64_t uniform_index(std::uint64_t n);

  // Exponential with the given rate (> 0).
  double exponential(double rate);

  // Poisson count with the given mean (>= 0), by counting unit-rate
  // exponential arrivals. O(mean) but exact and bias-free.
  std::int64_t poisson(double mean);

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace compflex
