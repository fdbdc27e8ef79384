#pragma once

// Causal structure of S(R) seen by an eternal observer: light cones, causal
// pasts and futures of events and world lines, the two event horizons and the
// throat intersection of the past horizon.
//
// Every set here is S(R) intersected with a half-space or hyperplane of
// Mink^{n+1}, so they share one representation (HalfSpaceSet) and one
// tolerance-aware answer (CausalVerdict).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "desitter/manifold.hpp"

namespace desitter {

enum class Relation { Less, Greater, Equal, LessEqual, GreaterEqual };

enum class Verdict { Inside, Boundary, Outside };
std::string_view to_string(Verdict v);

/// Three-way membership answer. `margin` is the signed residual of the
/// defining inequality, oriented so that positive values point inside;
/// the verdict is Boundary exactly when |margin| is within the band.
struct CausalVerdict {
  Verdict verdict;
  double margin;
};

CausalVerdict verdict_from_margin(double margin, double band);

/// { e in S(R) : a . e  rel  threshold }, with a Euclidean dot product.
class HalfSpaceSet {
 public:
  HalfSpaceSet(const SpacetimeContext& ctx, Vector covector, Relation relation,
               double threshold, std::string name = {});

  const Vector& covector() const { return covector_; }
  Relation relation() const { return relation_; }
  double threshold() const { return threshold_; }
  const std::string& name() const { return name_; }
  const SpacetimeContext& context() const { return ctx_; }

  bool is_equality() const { return relation_ == Relation::Equal; }
  bool is_strict() const { return relation_ == Relation::Less || relation_ == Relation::Greater; }

  /// tol * R.
  double band() const { return ctx_.tol * ctx_.radius; }

  /// a . e - threshold, negated for Less / LessEqual.
  double margin(const Vector& point) const;
  CausalVerdict evaluate(const Event& e) const;
  /// Set membership: Inside for strict relations, Inside or Boundary for
  /// closed ones, Boundary for equalities.
  bool contains(const Event& e) const;

 private:
  SpacetimeContext ctx_;
  Vector covector_;
  Relation relation_;
  double threshold_;
  std::string name_;
};

/// C_p = { x_1 = R } for p = (R, 0, ..., 0).
HalfSpaceSet light_cone_at_base(const SpacetimeContext& ctx);
/// C_{L(ψ)} = { x_1 - t tanh ψ = R / cosh ψ }.
HalfSpaceSet light_cone_on_worldline(const SpacetimeContext& ctx, double psi);

/// J^-(L) = { x_1 - t > 0 } for the canonical observer.
HalfSpaceSet observer_causal_past(const SpacetimeContext& ctx);
/// J^+(L) = { x_1 + t > 0 }.
HalfSpaceSet observer_causal_future(const SpacetimeContext& ctx);
/// J^+(-L) = { x_1 - t < 0 }.
HalfSpaceSet antipodal_causal_future(const SpacetimeContext& ctx);
/// J^-(-L) = { x_1 + t < 0 }.
HalfSpaceSet antipodal_causal_past(const SpacetimeContext& ctx);
/// Γ^-(L) = { x_1 = t }.
HalfSpaceSet past_event_horizon(const SpacetimeContext& ctx);
/// Γ^+(L) = { x_1 + t = 0 }.
HalfSpaceSet future_event_horizon(const SpacetimeContext& ctx);

/// The same six sets for an arbitrary timelike geodesic. With
/// k_± = p/R ± u the horizons are { g(e, k_±) = 0 }; covectors are scaled to
/// Euclidean length sqrt(2) so the canonical observer reproduces the sets above.
struct ObserverSets {
  HalfSpaceSet causal_past;
  HalfSpaceSet causal_future;
  HalfSpaceSet antipodal_causal_future;
  HalfSpaceSet antipodal_causal_past;
  HalfSpaceSet past_horizon;
  HalfSpaceSet future_horizon;
};
ObserverSets observer_sets(const WorldLine& line);

/// Whether q lies in J^-(p), decided in the rest frame of p: p is moved to
/// (R, 0, ..., 0) by canonicalize(WorldLine(p, Y(p))) and q is tested against
/// { x_1 >= R, t <= 0 }. The margin is R * min(x_1 - R, -t) in that frame, so
/// its first term equals g(p, q) - R^2. The band is tol * R^2; the cone and the
/// apex itself are Boundary.
CausalVerdict causal_past_of_event(const Event& q, const Event& p);
/// Mirror of causal_past_of_event with { x_1 >= R, t >= 0 }.
CausalVerdict causal_future_of_event(const Event& q, const Event& p);

enum class Side { Past, Future };

/// Independent check of the event verdicts from the ambient chord c = q - p:
/// q is in J^∓(p) iff g(c, c) <= 0 and c points to the past/future. The margin
/// is min(-g(c,c)/2, ∓R c_t); -g(c,c)/2 equals g(p, q) - R^2 on S(R).
CausalVerdict chord_oracle(const Event& p, const Event& q, Side side);

struct NestingReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Smallest margin seen for a sample of J^-(L(ψ1)) against J^-(L(ψ2)).
  double worst_margin = 0.0;
  /// Verdict for L(ψ1) itself against J^-(L(ψ2)).
  CausalVerdict apex{Verdict::Outside, 0.0};
};

/// Samples J^-(L(psi1)) on the canonical world line and counts samples that
/// fall Outside J^-(L(psi2)). Throws std::invalid_argument unless psi1 < psi2.
NestingReport nesting_check(const SpacetimeContext& ctx, double psi1, double psi2,
                            std::size_t samples, Sampler& sampler);

/// Random event of J^-(p) for p = (R, 0, ..., 0), with x_1 - R and the
/// transverse radius drawn from [0, extent].
Event sample_base_past(const SpacetimeContext& ctx, Sampler& sampler, double extent);

/// |x_1 - t tanh ψ| + R / cosh ψ for each ψ: how far both sides of the cone
/// equation of L(ψ), evaluated at q, are from the horizon equation x_1 - t = 0.
/// Bounds |x_1 - t tanh ψ - R / cosh ψ|, which is not monotone in ψ since the
/// upper half of C_{L(ψ)} crosses Γ^- at t = R e^ψ.
/// Throws std::invalid_argument unless q lies on Γ^-(L).
std::vector<double> horizon_limit_check(const SpacetimeContext& ctx, const Event& q,
                                        std::span<const double> psis);

/// Bisection on ψ in [-kWitnessPsiBound, kWitnessPsiBound] for the smallest ψ
/// with q in J^-(L(ψ)). Empty if q is not observed even at the upper bound.
std::optional<double> observation_witness(const Event& q);

inline constexpr double kWitnessPsiBound = 60.0;
inline constexpr int kWitnessMaxIterations = 200;

/// Geodesic distance on the round sphere of radius R:
/// R arccos(x_p . x_q / R^2) over the spatial parts.
double throat_distance(const Event& p, const Event& q);

struct ThroatIntersection {
  /// L ∩ S(R, 0).
  Event center;
  /// Members of Γ^-(L) ∩ S(R, 0). For n = 2 both points, otherwise samples of
  /// the (n-2)-sphere.
  std::vector<Event> points;
  std::vector<double> distances;
  /// max |distance - πR/2|.
  double max_distance_error = 0.0;
};

/// Γ^-(L) ∩ S(R, 0) for a world line crossing the throat.
ThroatIntersection throat_intersection(const WorldLine& line, std::size_t samples,
                                       Sampler& sampler);

}  // namespace desitter
