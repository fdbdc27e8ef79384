#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace desitter {

/// Seeded random source for property checks and figure sampling.
///
/// A Sampler is an ordinary value: copying it forks the stream, and every
/// draw advances only the instance it is called on.
class Sampler {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20130521;

  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  /// Uniformly distributed point on the unit sphere S^{dim-1} in R^dim.
  std::vector<double> unit_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

}  // namespace desitter
