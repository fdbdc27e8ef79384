#include "desitter/causal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace desitter {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::Boundary: return "boundary";
    case Verdict::Outside: return "outside";
  }
  return "?";
}

CausalVerdict verdict_from_margin(double margin, double band) {
  if (std::abs(margin) <= band) return {Verdict::Boundary, margin};
  return {margin > 0.0 ? Verdict::Inside : Verdict::Outside, margin};
}

HalfSpaceSet::HalfSpaceSet(const SpacetimeContext& ctx, Vector covector, Relation relation,
                           double threshold, std::string name)
    : ctx_(ctx),
      covector_(std::move(covector)),
      relation_(relation),
      threshold_(threshold),
      name_(std::move(name)) {
  ctx_.validate();
  if (covector_.size() != ctx_.dim()) {
    throw std::invalid_argument("half-space covector has wrong dimension");
  }
  if (covector_.is_zero()) throw std::invalid_argument("half-space covector is zero");
}

double HalfSpaceSet::margin(const Vector& point) const {
  const double value = euclidean_dot(covector_, point) - threshold_;
  return (relation_ == Relation::Less || relation_ == Relation::LessEqual) ? -value : value;
}

CausalVerdict HalfSpaceSet::evaluate(const Event& e) const {
  return verdict_from_margin(margin(e.point()), band());
}

bool HalfSpaceSet::contains(const Event& e) const {
  const Verdict v = evaluate(e).verdict;
  switch (relation_) {
    case Relation::Less:
    case Relation::Greater: return v == Verdict::Inside;
    case Relation::LessEqual:
    case Relation::GreaterEqual: return v != Verdict::Outside;
    case Relation::Equal: return v == Verdict::Boundary;
  }
  return false;
}

namespace {

// Covector (c1, 0, ..., 0, ct).
Vector x1_t_covector(std::size_t n, double c1, double ct) {
  Vector a = Vector::zero(n);
  a[0] = c1;
  a[n] = ct;
  return a;
}

}  // namespace

HalfSpaceSet light_cone_at_base(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, 0.0), Relation::Equal, ctx.radius,
                      "C_p");
}

HalfSpaceSet light_cone_on_worldline(const SpacetimeContext& ctx, double psi) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, -std::tanh(psi)), Relation::Equal,
                      ctx.radius / std::cosh(psi), "C_L(psi)");
}

HalfSpaceSet observer_causal_past(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, -1.0), Relation::Greater, 0.0, "J-(L)");
}

HalfSpaceSet observer_causal_future(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, 1.0), Relation::Greater, 0.0, "J+(L)");
}

HalfSpaceSet antipodal_causal_future(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, -1.0), Relation::Less, 0.0, "J+(-L)");
}

HalfSpaceSet antipodal_causal_past(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, 1.0), Relation::Less, 0.0, "J-(-L)");
}

HalfSpaceSet past_event_horizon(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, -1.0), Relation::Equal, 0.0,
                      "Gamma-(L)");
}

HalfSpaceSet future_event_horizon(const SpacetimeContext& ctx) {
  return HalfSpaceSet(ctx, x1_t_covector(ctx.n, 1.0, 1.0), Relation::Equal, 0.0,
                      "Gamma+(L)");
}

ObserverSets observer_sets(const WorldLine& line) {
  const SpacetimeContext& ctx = line.context();
  const Vector p_hat = (1.0 / ctx.radius) * line.base().point();
  // g(e, k) = a . e with a = G k.
  auto covector_of = [&ctx](Vector k) {
    k[ctx.n] = -k[ctx.n];
    k *= std::numbers::sqrt2 / euclidean_norm(k);
    return k;
  };
  const Vector past = covector_of(p_hat + line.tangent());
  const Vector future = covector_of(p_hat - line.tangent());
  return ObserverSets{
      HalfSpaceSet(ctx, past, Relation::Greater, 0.0, "J-(L)"),
      HalfSpaceSet(ctx, future, Relation::Greater, 0.0, "J+(L)"),
      HalfSpaceSet(ctx, past, Relation::Less, 0.0, "J+(-L)"),
      HalfSpaceSet(ctx, future, Relation::Less, 0.0, "J-(-L)"),
      HalfSpaceSet(ctx, past, Relation::Equal, 0.0, "Gamma-(L)"),
      HalfSpaceSet(ctx, future, Relation::Equal, 0.0, "Gamma+(L)"),
  };
}

namespace {

CausalVerdict event_cone_verdict(const Event& q, const Event& p, Side side) {
  const SpacetimeContext& ctx = p.context();
  const double R = ctx.radius;
  const Isometry frame = canonicalize(WorldLine(p, orientation_Y(p)));
  const Vector qc = frame.inverse().apply(q.point());
  const double t = side == Side::Past ? -qc.time() : qc.time();
  const double margin = R * std::min(qc[0] - R, t);
  return verdict_from_margin(margin, ctx.tol * R * R);
}

}  // namespace

CausalVerdict causal_past_of_event(const Event& q, const Event& p) {
  return event_cone_verdict(q, p, Side::Past);
}

CausalVerdict causal_future_of_event(const Event& q, const Event& p) {
  return event_cone_verdict(q, p, Side::Future);
}

CausalVerdict chord_oracle(const Event& p, const Event& q, Side side) {
  const SpacetimeContext& ctx = p.context();
  const double R = ctx.radius;
  const Vector chord = q.point() - p.point();
  const double causal = -0.5 * inner(chord, chord);
  const double order = side == Side::Past ? -chord.time() : chord.time();
  return verdict_from_margin(std::min(causal, R * order), ctx.tol * R * R);
}

Event sample_base_past(const SpacetimeContext& ctx, Sampler& sampler, double extent) {
  const double R = ctx.radius;
  const double x1 = R + sampler.uniform(0.0, extent);
  const double rho = sampler.uniform(0.0, extent);
  const std::vector<double> dir = sampler.unit_vector(ctx.n - 1);
  Vector q = Vector::zero(ctx.n);
  q[0] = x1;
  for (std::size_t k = 1; k < ctx.n; ++k) q[k] = rho * dir[k - 1];
  q[ctx.n] = -std::sqrt((x1 - R) * (x1 + R) + rho * rho);
  return Event(std::move(q), ctx);
}

NestingReport nesting_check(const SpacetimeContext& ctx, double psi1, double psi2,
                            std::size_t samples, Sampler& sampler) {
  if (!(psi1 < psi2)) throw std::invalid_argument("nesting_check requires psi1 < psi2");
  const WorldLine line = canonical_worldline(ctx);
  const Event outer = line.at(psi2);
  const Isometry to_psi1 = boost(psi1, ctx.n);

  NestingReport report;
  report.samples = samples;
  report.apex = causal_past_of_event(line.at(psi1), outer);
  report.worst_margin = report.apex.margin;
  if (report.apex.verdict == Verdict::Outside) ++report.violations;
  for (std::size_t i = 0; i < samples; ++i) {
    const Event q = apply(to_psi1, sample_base_past(ctx, sampler, 3.0 * ctx.radius));
    const CausalVerdict v = causal_past_of_event(q, outer);
    report.worst_margin = std::min(report.worst_margin, v.margin);
    if (v.verdict == Verdict::Outside) ++report.violations;
  }
  return report;
}

std::vector<double> horizon_limit_check(const SpacetimeContext& ctx, const Event& q,
                                        std::span<const double> psis) {
  const double R = ctx.radius;
  const double x1 = q[0];
  const double t = q.time();
  if (std::abs(x1 - t) > ctx.tol * std::max(R, euclidean_norm(q.point()))) {
    throw std::invalid_argument("horizon_limit_check: event is not on the past horizon");
  }
  std::vector<double> residuals;
  residuals.reserve(psis.size());
  for (double psi : psis) {
    residuals.push_back(std::abs(x1 - t * std::tanh(psi)) + R / std::cosh(psi));
  }
  return residuals;
}

std::optional<double> observation_witness(const Event& q) {
  const SpacetimeContext& ctx = q.context();
  const double R = ctx.radius;
  // q in J^-(L(ψ)) iff boost(-ψ) q lies in { x_1 >= R, t <= 0 }.
  auto observed_at = [&](double psi) {
    const Vector qc = boost(-psi, ctx.n).apply(q.point());
    return R * std::min(qc[0] - R, -qc.time()) >= -ctx.tol * R * R;
  };
  double lo = -kWitnessPsiBound;
  double hi = kWitnessPsiBound;
  if (!observed_at(hi)) return std::nullopt;
  if (observed_at(lo)) return lo;
  for (int i = 0; i < kWitnessMaxIterations && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (observed_at(mid) ? hi : lo) = mid;
  }
  return hi;
}

double throat_distance(const Event& p, const Event& q) {
  const double R = p.radius();
  double dot = 0.0;
  for (std::size_t k = 0; k < p.context().n; ++k) dot += p[k] * q[k];
  return R * std::acos(std::clamp(dot / (R * R), -1.0, 1.0));
}

ThroatIntersection throat_intersection(const WorldLine& line, std::size_t samples,
                                       Sampler& sampler) {
  const SpacetimeContext& ctx = line.context();
  const std::size_t n = ctx.n;
  const double R = ctx.radius;

  // t(L(ψ)) = p_t cosh ψ + R u_t sinh ψ vanishes at tanh ψ = -p_t / (R u_t).
  const double psi0 = std::atanh(-line.base().time() / (R * line.tangent().time()));
  WorldLine crossing = line.rebased(psi0);
  Vector center = crossing.base().point();
  center[n] = 0.0;

  // Γ^-(L) = { g(e, p/R + u) = 0 }; on t = 0 this is x . k_x = 0, |x| = R.
  std::vector<double> k(n);
  double knorm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = center[i] / R + crossing.tangent()[i];
    knorm2 += k[i] * k[i];
  }
  const double knorm = std::sqrt(knorm2);
  for (double& c : k) c /= knorm;

  std::vector<std::vector<double>> directions;
  if (n == 2) {
    directions.push_back({-k[1], k[0]});
    directions.push_back({k[1], -k[0]});
  } else {
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<double> d = sampler.unit_vector(n);
      double along = 0.0;
      for (std::size_t i = 0; i < n; ++i) along += d[i] * k[i];
      double norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        d[i] -= along * k[i];
        norm2 += d[i] * d[i];
      }
      if (norm2 < 1e-12) continue;
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& c : d) c *= inv;
      directions.push_back(std::move(d));
    }
  }

  ThroatIntersection result{Event(std::move(center), ctx), {}, {}, 0.0};
  for (const auto& d : directions) {
    Vector x = Vector::zero(n);
    // + 0.0 turns -0.0 into 0.0
    for (std::size_t i = 0; i < n; ++i) x[i] = R * d[i] + 0.0;
    Event e(std::move(x), ctx);
    const double dist = throat_distance(result.center, e);
    result.max_distance_error =
        std::max(result.max_distance_error, std::abs(dist - 0.5 * std::numbers::pi * R));
    result.distances.push_back(dist);
    result.points.push_back(std::move(e));
  }
  return result;
}

}  // namespace desitter
