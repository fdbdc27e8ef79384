#include "desitter/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace desitter {

namespace {

void require_same_dim(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()));
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 3) {
    throw std::invalid_argument("Mink^{n+1} requires n >= 2, got " +
                                std::to_string(coords_.size()) + " coordinates");
  }
}

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::vector<double>(coords)) {}

Vector Vector::zero(std::size_t n) { return Vector(std::vector<double>(n + 1, 0.0)); }

Vector Vector::basis(std::size_t n, std::size_t index) {
  if (index > n) throw std::invalid_argument("basis index out of range");
  Vector v = zero(n);
  v.coords_[index] = 1.0;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

double inner(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  const std::size_t n = u.spatial_dim();
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += u[k] * v[k];
  return sum - u[n] * v[n];
}

double euclidean_dot(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  double sum = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) sum += u[k] * v[k];
  return sum;
}

double euclidean_norm(const Vector& v) { return std::sqrt(euclidean_dot(v, v)); }

double form_tolerance(const Vector& u, const Vector& v) {
  return kFormEpsilon * std::max(1.0, euclidean_norm(u) * euclidean_norm(v));
}

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Null: return "null";
    case CausalClass::Zero: return "zero";
  }
  return "?";
}

std::string_view to_string(TimeDirection d) {
  switch (d) {
    case TimeDirection::Future: return "future";
    case TimeDirection::Past: return "past";
    case TimeDirection::None: return "none";
  }
  return "?";
}

CausalClass classify(const Vector& v) {
  if (v.is_zero()) return CausalClass::Zero;
  const double value = inner(v, v);
  const double tol = form_tolerance(v, v);
  if (value < -tol) return CausalClass::Timelike;
  if (value > tol) return CausalClass::Spacelike;
  return CausalClass::Null;
}

TimeDirection time_direction(const Vector& v) {
  const CausalClass c = classify(v);
  if (c == CausalClass::Spacelike || c == CausalClass::Zero) return TimeDirection::None;
  // g(X, v) = -v_t
  if (v.time() > 0.0) return TimeDirection::Future;
  if (v.time() < 0.0) return TimeDirection::Past;
  return TimeDirection::None;
}

TimeDirection flip(TimeDirection d) {
  switch (d) {
    case TimeDirection::Future: return TimeDirection::Past;
    case TimeDirection::Past: return TimeDirection::Future;
    case TimeDirection::None: return TimeDirection::None;
  }
  return TimeDirection::None;
}

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("matrix/vector dimension mismatch");
  std::vector<double> out(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) sum += (*this)(r, c) * v[c];
    out[r] = sum;
  }
  return Vector(std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t d = a.dim();
  Matrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const double ark = a(r, k);
      for (std::size_t c = 0; c < d; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

Isometry::Isometry(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.dim() < 3) throw std::invalid_argument("Mink^{n+1} requires n >= 2");
  const std::size_t t = matrix_.dim() - 1;
  preserves_time_ = matrix_(t, t) > 0.0;
}

Isometry Isometry::inverse() const {
  // G Λ^T G flips the sign of entries that mix the time row/column.
  Matrix inv = matrix_.transpose();
  const std::size_t t = inv.dim() - 1;
  for (std::size_t i = 0; i < t; ++i) {
    inv(i, t) = -inv(i, t);
    inv(t, i) = -inv(t, i);
  }
  return Isometry(std::move(inv));
}

Isometry boost(double psi, std::size_t n) {
  Matrix m = Matrix::identity(n + 1);
  const double ch = std::cosh(psi);
  const double sh = std::sinh(psi);
  m(0, 0) = ch;
  m(0, n) = sh;
  m(n, 0) = sh;
  m(n, n) = ch;
  return Isometry(std::move(m));
}

Isometry central_symmetry(std::size_t n) {
  Matrix m(n + 1);
  for (std::size_t i = 0; i <= n; ++i) m(i, i) = -1.0;
  return Isometry(std::move(m));
}

Isometry spatial_rotation(std::size_t axis_a, std::size_t axis_b, double angle,
                          std::size_t n) {
  if (axis_a < 1 || axis_a > n || axis_b < 1 || axis_b > n) {
    throw std::invalid_argument("rotation axes must lie in 1.." + std::to_string(n));
  }
  if (axis_a == axis_b) throw std::invalid_argument("rotation axes must be distinct");
  const std::size_t a = axis_a - 1;
  const std::size_t b = axis_b - 1;
  Matrix m = Matrix::identity(n + 1);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(a, a) = c;
  m(a, b) = -s;
  m(b, a) = s;
  m(b, b) = c;
  return Isometry(std::move(m));
}

double verify_isometry(const Matrix& m) {
  const std::size_t d = m.dim();
  const std::size_t t = d - 1;
  double worst = 0.0;
  double scale = 1.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) scale = std::max(scale, m(r, c) * m(r, c));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      double sum = 0.0;
      for (std::size_t k = 0; k < t; ++k) sum += m(k, r) * m(k, c);
      sum -= m(t, r) * m(t, c);
      const double expected = r != c ? 0.0 : (r == t ? -1.0 : 1.0);
      worst = std::max(worst, std::abs(sum - expected));
    }
  }
  return worst / scale;
}

}  // namespace desitter
