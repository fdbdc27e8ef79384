#pragma once

#include <cmath>
#include <numbers>

#include "desitter/lorentz.hpp"
#include "desitter/sampler.hpp"

namespace desitter::testing {

inline Vector random_vector(std::size_t n, Sampler& s, double scale = 3.0) {
  std::vector<double> c(n + 1);
  for (double& x : c) x = s.uniform(-scale, scale);
  return Vector(std::move(c));
}

// Time-preserving isometry: rotations in every spatial plane around a boost.
inline Isometry random_isometry(std::size_t n, Sampler& s, double max_psi = 2.0) {
  Isometry iso = boost(s.uniform(-max_psi, max_psi), n);
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      const double angle = s.uniform(-std::numbers::pi, std::numbers::pi);
      iso = spatial_rotation(a, b, angle, n) * iso;
      iso = iso * spatial_rotation(a, b, s.uniform(-1.0, 1.0), n);
    }
  }
  return iso;
}

}  // namespace desitter::testing
