#pragma once

// Lorentz form on Mink^{n+1}, causal classification of vectors and the
// isometries used by the rest of the library (boosts, spatial rotations,
// central symmetry).
//
// Coordinates are ordered (x_1, ..., x_n, t); the time coordinate is always
// the last one. The form has signature (+, ..., +, -).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace desitter {

/// Relative threshold for sign tests on form values.
inline constexpr double kFormEpsilon = 1e-9;

/// A point or tangent vector of Mink^{n+1}, n >= 2.
class Vector {
 public:
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  /// Zero vector of Mink^{n+1}.
  static Vector zero(std::size_t n);
  /// Unit vector along coordinate `index` (0-based, t is index n).
  static Vector basis(std::size_t n, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  /// Spatial dimension n.
  std::size_t spatial_dim() const { return coords_.size() - 1; }

  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  double time() const { return coords_.back(); }
  std::span<const double> spatial() const {
    return {coords_.data(), coords_.size() - 1};
  }
  std::span<const double> coords() const { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(double s, Vector v) { return v *= s; }
  friend Vector operator*(Vector v, double s) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= -1.0; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

/// Lorentz form: sum_k u_k v_k - u_t v_t. Throws on dimension mismatch.
double inner(const Vector& u, const Vector& v);

/// Plain Euclidean dot product of coordinates.
double euclidean_dot(const Vector& u, const Vector& v);
double euclidean_norm(const Vector& v);

/// Absolute threshold used when comparing inner(u, v) against zero:
/// kFormEpsilon * max(1, |u|_e |v|_e).
double form_tolerance(const Vector& u, const Vector& v);

enum class CausalClass { Timelike, Spacelike, Null, Zero };
enum class TimeDirection { Future, Past, None };

std::string_view to_string(CausalClass c);
std::string_view to_string(TimeDirection d);

CausalClass classify(const Vector& v);

/// Direction relative to X = (0, ..., 0, 1): Future iff g(X, v) < 0.
TimeDirection time_direction(const Vector& v);

TimeDirection flip(TimeDirection d);

/// Dense row-major square matrix acting on Mink^{n+1}.
class Matrix {
 public:
  explicit Matrix(std::size_t dim);
  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Largest absolute entry of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Linear isometry of Mink^{n+1}.
///
/// The time-orientation flag is derived from the matrix: Λ preserves the
/// time direction iff g(X, ΛX) < 0, i.e. iff Λ_tt > 0.
class Isometry {
 public:
  explicit Isometry(Matrix m);

  const Matrix& matrix() const { return matrix_; }
  bool preserves_time() const { return preserves_time_; }
  std::size_t dim() const { return matrix_.dim(); }

  Vector apply(const Vector& v) const { return matrix_.apply(v); }
  Vector operator()(const Vector& v) const { return apply(v); }

  /// Inverse via Λ^{-1} = G Λ^T G; exact for a form-preserving Λ.
  Isometry inverse() const;

  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    return Isometry(a.matrix_ * b.matrix_);
  }

 private:
  Matrix matrix_;
  bool preserves_time_;
};

/// Hyperbolic rotation in the (x_1, t) plane:
/// x_1' = x_1 cosh ψ + t sinh ψ,  t' = x_1 sinh ψ + t cosh ψ.
Isometry boost(double psi, std::size_t n);

/// i_0 = -Id. Form-preserving, reverses the time direction.
Isometry central_symmetry(std::size_t n);

/// Rotation by `angle` in the plane of spatial axes `axis_a`, `axis_b`
/// (1-based, matching x_1..x_n). Throws std::invalid_argument if an index is
/// out of range or the two coincide.
Isometry spatial_rotation(std::size_t axis_a, std::size_t axis_b, double angle,
                          std::size_t n);

/// Max-norm of Λ^T G Λ - G, divided by max(1, max|Λ_ij|^2) so that large
/// boosts are judged relative to their own floating-point resolution.
double verify_isometry(const Matrix& m);
inline double verify_isometry(const Isometry& iso) {
  return verify_isometry(iso.matrix());
}

}  // namespace desitter
