#include <doctest.h>

#include <map>
#include <stdexcept>

#include "desitter/quotient.hpp"

using namespace desitter;

namespace {

SpacetimeContext context(double R, std::size_t n = 2) {
  SpacetimeContext ctx;
  ctx.radius = R;
  ctx.n = n;
  return ctx;
}

}  // namespace

TEST_CASE("antipode") {
  const auto ctx = context(1.0);
  const Event p(Vector{1, 0, 0}, ctx);
  CHECK(antipode(p).point() == Vector{-1, 0, 0});
  CHECK(antipode(antipode(p)) == p);
  Sampler s(31);
  for (int i = 0; i < 1000; ++i) {
    const Event e = random_event(ctx, s);
    CHECK(on_hyperboloid(antipode(e).point(), ctx));
  }
}

TEST_CASE("quotient representatives") {
  const auto ctx = context(1.0);
  CHECK(quotient_rep(Event(Vector{-1, 0, 0}, ctx)).representative().point() == Vector{1, 0, 0});
  CHECK(quotient_rep(Event(Vector{0, -1, 0}, ctx)).representative().point() == Vector{0, 1, 0});
  // first coordinate is below the guard, so the sign of x_2 decides
  CHECK(quotient_rep(Event(Vector{1e-12, -1, 0}, ctx)).representative()[1] == 1.0);

  Sampler s(32);
  for (std::size_t n : {2u, 3u}) {
    const auto c = context(1.3, n);
    for (int i = 0; i < 10000; ++i) {
      const Event e = random_event(c, s);
      const QuotientPoint q = quotient_rep(e);
      CHECK(q == quotient_rep(antipode(e)));
      CHECK(quotient_rep(q.representative()) == q);
      CHECK((q.representative() == e || q.representative() == antipode(e)));
    }
  }
}

TEST_CASE("injectivity on the open causal sets") {
  Sampler s(33);
  const auto ctx = context(1.0, 3);
  for (const HalfSpaceSet& region :
       {observer_causal_past(ctx), observer_causal_future(ctx), antipodal_causal_future(ctx),
        antipodal_causal_past(ctx)}) {
    const SymmetryReport r = injectivity_check(region, 10000, s);
    CHECK(r.samples == 10000);
    CHECK(r.violations == 0);
  }
  CHECK_THROWS_AS(injectivity_check(past_event_horizon(ctx), 10, s), std::invalid_argument);
}

TEST_CASE("pr is injective on J-(L) and 2-to-1 on the horizon") {
  Sampler s(34);
  const auto ctx = context(1.0, 2);
  const HalfSpaceSet past = observer_causal_past(ctx);
  std::map<std::vector<double>, int> seen;
  int inside = 0;
  while (inside < 3000) {
    const Event e = random_event(ctx, s);
    if (!past.contains(e)) continue;
    ++inside;
    const auto rep = quotient_rep(e).representative().point().coords();
    ++seen[std::vector<double>(rep.begin(), rep.end())];
    CHECK_FALSE(past.contains(antipode(e)));
  }
  for (const auto& [rep, count] : seen) CHECK(count == 1);

  const HalfSpaceSet horizon = past_event_horizon(ctx);
  for (int i = 0; i < 1000; ++i) {
    const Event h = sample_past_horizon(ctx, s, 5.0);
    // both preimages ±h are on the horizon and are glued
    CHECK(horizon.contains(antipode(h)));
    CHECK(quotient_rep(h) == quotient_rep(antipode(h)));
    CHECK_FALSE(h == antipode(h));
  }
}

TEST_CASE("horizon central symmetry") {
  const auto ctx = context(1.0);
  const HalfSpaceSet past = past_event_horizon(ctx);
  for (double s : {-4.0, 0.5, 3.0}) {
    CHECK(past.contains(Event(Vector{s, 1, s}, ctx)));
    CHECK(past.contains(Event(Vector{-s, -1, -s}, ctx)));
  }
  Sampler sampler(35);
  for (std::size_t n : {2u, 3u}) {
    const SymmetryReport r = horizon_symmetry_check(context(2.0, n), 10000, sampler);
    CHECK(r.samples == 20000);
    CHECK(r.violations == 0);
  }
  // -e of a Γ^- event is on Γ^+ only at x_1 = t = 0
  const Event throat(Vector{0, 1, 0}, ctx);
  CHECK(future_event_horizon(ctx).contains(antipode(throat)));
  CHECK_FALSE(future_event_horizon(ctx).contains(antipode(Event(Vector{1, 1, 1}, ctx))));
}
