#include "desitter/quotient.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace desitter {

Event antipode(const Event& e) { return Event(-e.point(), e.context()); }

QuotientPoint quotient_rep(const Event& e) {
  const SpacetimeContext& ctx = e.context();
  const double guard = ctx.tol * ctx.radius;
  for (double c : e.point().coords()) {
    if (std::abs(c) > guard) {
      return QuotientPoint(c < 0.0 ? antipode(e) : e);
    }
  }
  // Unreachable on S(R): some coordinate has magnitude >= R / sqrt(n + 1).
  return QuotientPoint(e);
}

SymmetryReport injectivity_check(const HalfSpaceSet& region, std::size_t samples,
                                 Sampler& sampler) {
  if (region.is_equality()) {
    throw std::invalid_argument(
        "injectivity_check needs an open causal set; horizons are centrally symmetric");
  }
  const SpacetimeContext& ctx = region.context();
  SymmetryReport report;
  while (report.samples < samples) {
    const Event e = random_event(ctx, sampler);
    if (region.evaluate(e).verdict != Verdict::Inside) continue;
    ++report.samples;
    if (region.evaluate(antipode(e)).verdict != Verdict::Outside) ++report.violations;
  }
  return report;
}

namespace {

Event horizon_event(const SpacetimeContext& ctx, Sampler& sampler, double extent, double sign) {
  const double s = sampler.uniform(-extent, extent);
  const std::vector<double> dir = sampler.unit_vector(ctx.n - 1);
  Vector e = Vector::zero(ctx.n);
  e[0] = sign * s;
  for (std::size_t k = 1; k < ctx.n; ++k) e[k] = ctx.radius * dir[k - 1];
  e[ctx.n] = s;
  return Event(std::move(e), ctx);
}

}  // namespace

Event sample_past_horizon(const SpacetimeContext& ctx, Sampler& sampler, double extent) {
  return horizon_event(ctx, sampler, extent, 1.0);
}

Event sample_future_horizon(const SpacetimeContext& ctx, Sampler& sampler, double extent) {
  return horizon_event(ctx, sampler, extent, -1.0);
}

SymmetryReport horizon_symmetry_check(const SpacetimeContext& ctx, std::size_t samples,
                                      Sampler& sampler) {
  const HalfSpaceSet past = past_event_horizon(ctx);
  const HalfSpaceSet future = future_event_horizon(ctx);
  const double extent = 10.0 * ctx.radius;
  SymmetryReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    const Event gp = sample_past_horizon(ctx, sampler, extent);
    const Event gf = sample_future_horizon(ctx, sampler, extent);
    report.samples += 2;
    if (!past.contains(antipode(gp))) ++report.violations;
    if (!future.contains(antipode(gf))) ++report.violations;
    // -e on both horizons forces x_1 = t = 0.
    const Event neg = antipode(gp);
    const bool at_throat = std::abs(gp[0]) <= past.band() && std::abs(gp.time()) <= past.band();
    if (future.contains(neg) && !at_throat) ++report.violations;
  }
  return report;
}

}  // namespace desitter
