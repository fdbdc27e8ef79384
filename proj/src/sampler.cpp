#include "desitter/sampler.hpp"

#include <cmath>

namespace desitter {

std::vector<double> Sampler::unit_vector(std::size_t dim) {
  std::vector<double> v(dim);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& c : v) {
      c = normal();
      norm2 += c * c;
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : v) c *= inv;
  return v;
}

}  // namespace desitter
