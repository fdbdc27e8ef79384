#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "desitter/lorentz.hpp"
#include "support.hpp"

using namespace desitter;
using desitter::testing::random_isometry;
using desitter::testing::random_vector;

TEST_CASE("inner product examples") {
  CHECK(inner(Vector{0, 0, 1}, Vector{0, 0, 1}) == -1.0);
  CHECK(inner(Vector{1, 0, 0}, Vector{0, 1, 0}) == 0.0);
  CHECK(inner(Vector{1, 0, 1}, Vector{1, 0, 1}) == 0.0);
  CHECK_THROWS_AS(inner(Vector{1, 0, 0}, Vector{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("vectors need n >= 2") {
  CHECK_THROWS_AS(Vector({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("inner is symmetric and bilinear") {
  Sampler s(1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + i % 3;
    const Vector u = random_vector(n, s);
    const Vector v = random_vector(n, s);
    const Vector w = random_vector(n, s);
    const double a = s.uniform(-2, 2);
    const double b = s.uniform(-2, 2);
    CHECK(inner(u, v) == doctest::Approx(inner(v, u)).epsilon(1e-14));
    const double lhs = inner(a * u + b * v, w);
    const double rhs = a * inner(u, w) + b * inner(v, w);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("classify and time_direction examples") {
  CHECK(classify(Vector{0, 0, 1}) == CausalClass::Timelike);
  CHECK(classify(Vector{1, 0, 1}) == CausalClass::Null);
  CHECK(classify(Vector{1, 0, 0}) == CausalClass::Spacelike);
  CHECK(classify(Vector{0, 0, 0}) == CausalClass::Zero);

  CHECK(time_direction(Vector{0, 0, 1}) == TimeDirection::Future);
  CHECK(time_direction(Vector{0, 0, -1}) == TimeDirection::Past);
  CHECK(time_direction(Vector{1, 0, 0}) == TimeDirection::None);
  CHECK(time_direction(Vector{0, 0, 0}) == TimeDirection::None);
  CHECK(time_direction(Vector{-1, 0, 1}) == TimeDirection::Future);
}

TEST_CASE("null cone is resolved relative to vector scale") {
  // 1e6 (1, 0, 1) perturbed below the relative threshold stays null
  const Vector v{1e6, 0, 1e6 + 1e-5};
  CHECK(classify(v) == CausalClass::Null);
  CHECK(classify(Vector{1, 0, 1 + 1e-6}) == CausalClass::Timelike);
}

TEST_CASE("boost examples") {
  const double R = 1.7;
  const double psi = 0.8;
  const Vector image = boost(psi, 2).apply(Vector{R, 0, 0});
  CHECK(image[0] == doctest::Approx(R * std::cosh(psi)));
  CHECK(image[1] == 0.0);
  CHECK(image[2] == doctest::Approx(R * std::sinh(psi)));

  CHECK(boost(0.0, 3).matrix() == Matrix::identity(4));
  CHECK(boost(0.3, 2).preserves_time());

  Sampler s(2);
  const Vector v = random_vector(2, s);
  const Vector back = boost(-1.0, 2).apply(boost(1.0, 2).apply(v));
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-12));
}

TEST_CASE("boosts form a one-parameter group") {
  Sampler s(3);
  for (int i = 0; i < 200; ++i) {
    const double a = s.uniform(-5, 5);
    const double b = s.uniform(-5, 5);
    const Matrix lhs = (boost(a, 3) * boost(b, 3)).matrix();
    CHECK(max_abs_diff(lhs, boost(a + b, 3).matrix()) <= 1e-10);
  }
}

TEST_CASE("central symmetry") {
  const Isometry i0 = central_symmetry(2);
  CHECK(i0.apply(Vector{2.0, 0, 0}) == Vector{-2.0, 0, 0});
  CHECK_FALSE(i0.preserves_time());
  CHECK(verify_isometry(i0) == 0.0);
  CHECK(time_direction(i0.apply(Vector{0, 0, 1})) == TimeDirection::Past);
  Sampler s(4);
  for (int i = 0; i < 100; ++i) {
    const Vector u = random_vector(2, s);
    const Vector v = random_vector(2, s);
    CHECK(inner(i0.apply(u), i0.apply(v)) == inner(u, v));
  }
}

TEST_CASE("spatial rotation") {
  const Vector r = spatial_rotation(1, 2, std::numbers::pi / 2, 2).apply(Vector{1.5, 0, 0});
  CHECK(std::abs(r[0]) < 1e-15);
  CHECK(r[1] == doctest::Approx(1.5));
  CHECK(r[2] == 0.0);
  CHECK(spatial_rotation(1, 3, 0.0, 3).matrix() == Matrix::identity(4));
  const Matrix round = (spatial_rotation(2, 3, 0.7, 3) * spatial_rotation(2, 3, -0.7, 3)).matrix();
  CHECK(max_abs_diff(round, Matrix::identity(4)) < 1e-15);
  CHECK(spatial_rotation(1, 2, 0.4, 2).preserves_time());

  CHECK_THROWS_AS(spatial_rotation(0, 1, 0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(spatial_rotation(1, 3, 0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(spatial_rotation(2, 2, 0.1, 2), std::invalid_argument);
}

TEST_CASE("verify_isometry residuals") {
  CHECK(verify_isometry(Matrix::identity(3)) == 0.0);
  CHECK(verify_isometry(boost(2.5, 2)) <= 1e-12);

  // Oracle: with Λ = I + δ e_11, (Λ^T G Λ - G)_11 = (1+δ)^2 - 1 and the scale is (1+δ)^2.
  Matrix m = Matrix::identity(3);
  m(0, 0) += 1e-3;
  const double expected = (1.001 * 1.001 - 1.0) / (1.001 * 1.001);
  CHECK(verify_isometry(m) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(verify_isometry(m) >= 1e-4);

  // Same perturbation on a mixing entry of boost(1): residual 2 δ cosh(1) / cosh(1)^2 at most.
  Matrix b = boost(1.0, 2).matrix();
  b(2, 0) += 1e-3;
  CHECK(verify_isometry(b) >= 1e-4);
}

TEST_CASE("isometry preserves the form and causal character") {
  Sampler s(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 2;
    const Isometry iso = random_isometry(n, s);
    CHECK(iso.preserves_time());
    CHECK(verify_isometry(iso) <= 1e-12);
    const Vector u = random_vector(n, s);
    const Vector v = random_vector(n, s);
    const double scale = euclidean_norm(u) * euclidean_norm(v) *
                         std::max(1.0, std::pow(euclidean_norm(iso.apply(Vector::basis(n, n))), 2));
    CHECK(std::abs(inner(iso(u), iso(v)) - inner(u, v)) <= 1e-12 * scale);

    CHECK(classify(iso(u)) == classify(u));
    if (classify(u) != CausalClass::Spacelike) {
      CHECK(time_direction(iso(u)) == time_direction(u));
      CHECK(time_direction(central_symmetry(n)(u)) == flip(time_direction(u)));
    }
    CHECK(classify(-u) == classify(u));
  }
}

TEST_CASE("inverse is exact for isometries") {
  Sampler s(6);
  const Isometry iso = random_isometry(3, s);
  CHECK(max_abs_diff((iso * iso.inverse()).matrix(), Matrix::identity(4)) < 1e-12);
  CHECK(iso.inverse().preserves_time());
}
