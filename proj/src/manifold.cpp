#include "desitter/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace desitter {

void SpacetimeContext::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("de Sitter radius must be positive and finite");
  }
  if (n < 2) throw std::invalid_argument("spatial dimension n must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

double hyperboloid_residual(const Vector& v, const SpacetimeContext& ctx) {
  return inner(v, v) - ctx.radius * ctx.radius;
}

bool on_hyperboloid(const Vector& v, const SpacetimeContext& ctx) {
  if (v.size() != ctx.dim()) return false;
  const double r2 = ctx.radius * ctx.radius;
  const double scale = std::max(r2, euclidean_dot(v, v));
  return std::abs(hyperboloid_residual(v, ctx)) <= ctx.tol * scale;
}

Event::Event(Vector point, const SpacetimeContext& ctx) : point_(std::move(point)), ctx_(ctx) {
  ctx_.validate();
  if (point_.size() != ctx_.dim()) {
    throw std::invalid_argument("event has " + std::to_string(point_.size()) +
                                " coordinates, expected " + std::to_string(ctx_.dim()));
  }
  if (!on_hyperboloid(point_, ctx_)) {
    throw std::invalid_argument("point is not on S(R): residual " +
                                std::to_string(hyperboloid_residual(point_, ctx_)));
  }
}

Event apply(const Isometry& iso, const Event& e) {
  return Event(iso.apply(e.point()), e.context());
}

SliceSphere::SliceSphere(const SpacetimeContext& ctx, double c)
    : ctx_(ctx), time_(c), spatial_radius_(std::hypot(ctx.radius, c)) {
  ctx_.validate();
}

Event SliceSphere::sample(Sampler& sampler) const {
  std::vector<double> coords = sampler.unit_vector(ctx_.n);
  for (double& x : coords) x *= spatial_radius_;
  coords.push_back(time_);
  return Event(Vector(std::move(coords)), ctx_);
}

SliceSphere slice_sphere(const SpacetimeContext& ctx, double c) { return SliceSphere(ctx, c); }

Event random_event(const SpacetimeContext& ctx, Sampler& sampler, double psi_max) {
  const double psi = sampler.uniform(-psi_max, psi_max);
  return SliceSphere(ctx, ctx.radius * std::sinh(psi)).sample(sampler);
}

Vector orientation_Y(const Event& e) {
  const SpacetimeContext& ctx = e.context();
  const double R = ctx.radius;
  const double t = e.time();
  double xnorm2 = 0.0;
  for (double x : e.point().spatial()) xnorm2 += x * x;
  const double xnorm = std::sqrt(xnorm2);  // >= R on S(R)
  Vector y = Vector::zero(ctx.n);
  for (std::size_t k = 0; k < ctx.n; ++k) y[k] = t * e[k] / (R * xnorm);
  y[ctx.n] = xnorm / R;
  return y;
}

Vector orientation_Y(const Vector& v, const SpacetimeContext& ctx) {
  if (!on_hyperboloid(v, ctx)) {
    throw std::invalid_argument("orientation field Y is defined only on S(R)");
  }
  return orientation_Y(Event(v, ctx));
}

WorldLine::WorldLine(Event base, Vector tangent)
    : base_(std::move(base)), tangent_(std::move(tangent)) {
  const SpacetimeContext& ctx = base_.context();
  if (tangent_.size() != ctx.dim()) {
    throw std::invalid_argument("world line tangent has wrong dimension");
  }
  const double unu = inner(tangent_, tangent_);
  const double tu = euclidean_norm(tangent_);
  if (std::abs(unu + 1.0) > ctx.tol * std::max(1.0, tu * tu)) {
    throw std::invalid_argument("world line tangent is not unit timelike: g(u,u) = " +
                                std::to_string(unu));
  }
  const double pu = inner(base_.point(), tangent_);
  if (std::abs(pu) > ctx.tol * std::max(ctx.radius, euclidean_norm(base_.point()) * tu)) {
    throw std::invalid_argument("world line tangent is not tangent to S(R): g(p,u) = " +
                                std::to_string(pu));
  }
  if (time_direction(tangent_) != TimeDirection::Future) {
    throw std::invalid_argument("world line tangent is not future directed");
  }
}

Event WorldLine::at(double psi) const {
  const double R = context().radius;
  return Event(std::cosh(psi) * base_.point() + (R * std::sinh(psi)) * tangent_, context());
}

Vector WorldLine::velocity(double psi) const {
  const double R = context().radius;
  return std::sinh(psi) * base_.point() + (R * std::cosh(psi)) * tangent_;
}

WorldLine WorldLine::rebased(double psi) const {
  return WorldLine(at(psi), (1.0 / context().radius) * velocity(psi));
}

WorldLine canonical_worldline(const SpacetimeContext& ctx) {
  ctx.validate();
  Vector p = Vector::zero(ctx.n);
  p[0] = ctx.radius;
  return WorldLine(Event(std::move(p), ctx), Vector::basis(ctx.n, ctx.n));
}

Isometry canonicalize(const WorldLine& line) {
  const SpacetimeContext& ctx = line.context();
  const std::size_t n = ctx.n;

  std::vector<Vector> frame;
  frame.push_back((1.0 / ctx.radius) * line.base().point());
  frame.push_back(line.tangent());

  auto project_out = [&frame](Vector v) {
    for (const Vector& f : frame) {
      const double ff = inner(f, f);  // +-1
      v -= (inner(v, f) / ff) * f;
    }
    return v;
  };

  std::vector<Vector> completion;
  for (std::size_t k = 0; k <= n && completion.size() + 1 < n; ++k) {
    Vector v = project_out(project_out(Vector::basis(n, k)));
    const double norm2 = inner(v, v);
    if (norm2 <= kPivotThreshold) continue;
    v *= 1.0 / std::sqrt(norm2);
    frame.push_back(v);
    completion.push_back(std::move(v));
  }
  if (completion.size() + 1 != n) {
    throw std::runtime_error("canonicalize: frame completion failed");
  }

  Matrix m(n + 1);
  auto set_column = [&m, n](std::size_t col, const Vector& v) {
    for (std::size_t r = 0; r <= n; ++r) m(r, col) = v[r];
  };
  set_column(0, frame[0]);
  for (std::size_t k = 0; k < completion.size(); ++k) set_column(k + 1, completion[k]);
  set_column(n, line.tangent());
  return Isometry(std::move(m));
}

Event NullRay::at(double s) const {
  return Event(base_.point() + s * direction_, base_.context());
}

NullRay null_ray(const Event& base, const Vector& direction) {
  if (direction.size() != base.point().size()) {
    throw std::invalid_argument("null ray direction has wrong dimension");
  }
  if (direction.is_zero()) throw std::invalid_argument("null ray direction is zero");
  if (std::abs(inner(direction, direction)) > form_tolerance(direction, direction)) {
    throw std::invalid_argument("null ray direction is not null: g(u,u) = " +
                                std::to_string(inner(direction, direction)));
  }
  const SpacetimeContext& ctx = base.context();
  const double pu = inner(base.point(), direction);
  if (std::abs(pu) > ctx.tol * std::max(ctx.radius, euclidean_norm(base.point())) *
                         std::max(1.0, euclidean_norm(direction))) {
    throw std::invalid_argument("null ray direction is not tangent to S(R): g(p0,u) = " +
                                std::to_string(pu));
  }
  return NullRay(base, direction);
}

}  // namespace desitter
