#pragma once

// The one-sheeted hyperboloid S(R) = { sum x_k^2 - t^2 = R^2 } inside
// Mink^{n+1}: events, constant-time slices, the orientation field Y, timelike
// world lines and null rulings.

#include <cstddef>
#include <utility>

#include "desitter/lorentz.hpp"
#include "desitter/sampler.hpp"

namespace desitter {

/// De Sitter radius R, spatial dimension n and the relative tolerance used
/// for membership tests.
struct SpacetimeContext {
  double radius = 1.0;
  std::size_t n = 2;
  double tol = kFormEpsilon;

  /// Throws std::invalid_argument unless R > 0 (finite), n >= 2, tol > 0.
  void validate() const;
  std::size_t dim() const { return n + 1; }
};

/// True iff |inner(v,v) - R^2| <= tol * max(R^2, |v|_e^2).
///
/// For |v| ~ R this is the plain relative test tol * R^2; far from the throat
/// the bound grows with |v|^2, tracking the cancellation in x^2 - t^2.
bool on_hyperboloid(const Vector& v, const SpacetimeContext& ctx);

/// Signed residual inner(v,v) - R^2.
double hyperboloid_residual(const Vector& v, const SpacetimeContext& ctx);

/// A point of Mink^{n+1} certified to lie on S(R).
class Event {
 public:
  /// Throws std::invalid_argument if `point` is off the hyperboloid.
  Event(Vector point, const SpacetimeContext& ctx);

  const Vector& point() const { return point_; }
  const SpacetimeContext& context() const { return ctx_; }
  double radius() const { return ctx_.radius; }

  double operator[](std::size_t i) const { return point_[i]; }
  double time() const { return point_.time(); }

  friend bool operator==(const Event& a, const Event& b) { return a.point_ == b.point_; }

 private:
  Vector point_;
  SpacetimeContext ctx_;
};

/// Image of an event under a form-preserving map; S(R) is invariant.
Event apply(const Isometry& iso, const Event& e);

/// The slice S(R, c) = S(R) ∩ {t = c}: a round sphere of radius sqrt(R^2 + c^2).
class SliceSphere {
 public:
  SliceSphere(const SpacetimeContext& ctx, double c);

  double time() const { return time_; }
  double spatial_radius() const { return spatial_radius_; }
  const SpacetimeContext& context() const { return ctx_; }

  /// Uniform random event on the slice.
  Event sample(Sampler& sampler) const;

 private:
  SpacetimeContext ctx_;
  double time_;
  double spatial_radius_;
};

SliceSphere slice_sphere(const SpacetimeContext& ctx, double c);

/// Random event on S(R) with boost parameter ψ uniform in [-psi_max, psi_max]
/// (t = R sinh ψ) and uniform spatial direction.
Event random_event(const SpacetimeContext& ctx, Sampler& sampler, double psi_max = 3.0);

/// Future unit timelike vector at e, tangent to S(R) and orthogonal to the
/// slice through e: Y = (t x / (R |x|), |x| / R).
Vector orientation_Y(const Event& e);
/// Same, for a raw point; throws std::invalid_argument if it is off S(R).
Vector orientation_Y(const Vector& v, const SpacetimeContext& ctx);

/// Timelike geodesic L(ψ) = cosh(ψ) p + R sinh(ψ) u.
///
/// `tangent` must be a future unit timelike vector tangent to S(R) at `base`;
/// the constructor throws std::invalid_argument otherwise.
class WorldLine {
 public:
  WorldLine(Event base, Vector tangent);

  const Event& base() const { return base_; }
  const Vector& tangent() const { return tangent_; }
  const SpacetimeContext& context() const { return base_.context(); }

  Event at(double psi) const;
  /// dL/dψ.
  Vector velocity(double psi) const;
  /// Same world line re-based at L(psi), with tangent velocity(psi) / R.
  WorldLine rebased(double psi) const;

 private:
  Event base_;
  Vector tangent_;
};

/// The orbit of (R, 0, ..., 0) under the boost group: L(ψ) = (R ch ψ, 0, ..., R sh ψ).
WorldLine canonical_worldline(const SpacetimeContext& ctx);

/// Time-preserving isometry taking the canonical world line onto `line`
/// pointwise in ψ: i(R e_1) = base, i(e_t) = tangent.
///
/// The frame is completed by Gram-Schmidt against the Lorentz form, starting
/// from the standard basis and skipping candidates whose residual norm falls
/// below kPivotThreshold.
Isometry canonicalize(const WorldLine& line);

inline constexpr double kPivotThreshold = 1e-6;

/// Null geodesic γ(s) = p0 + s u, which lies on S(R) for every s.
class NullRay {
 public:
  const Event& base() const { return base_; }
  const Vector& direction() const { return direction_; }
  Event at(double s) const;

 private:
  friend NullRay null_ray(const Event& base, const Vector& direction);
  NullRay(Event base, Vector direction) : base_(std::move(base)), direction_(std::move(direction)) {}

  Event base_;
  Vector direction_;
};

/// Throws std::invalid_argument naming the failed condition if u is zero, not
/// null, or not tangent to S(R) at p0.
NullRay null_ray(const Event& base, const Vector& direction);

}  // namespace desitter
