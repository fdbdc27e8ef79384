#pragma once

// Antipodal identification pr : S(R) -> S(R) / {e ~ -e}.

#include <cstddef>

#include "desitter/causal.hpp"

namespace desitter {

Event antipode(const Event& e);

/// Point of the quotient, stored as its sign-normalized representative.
class QuotientPoint {
 public:
  const Event& representative() const { return rep_; }

  friend bool operator==(const QuotientPoint& a, const QuotientPoint& b) {
    return a.rep_ == b.rep_;
  }

 private:
  friend QuotientPoint quotient_rep(const Event& e);
  explicit QuotientPoint(Event rep) : rep_(std::move(rep)) {}

  Event rep_;
};

/// Negates e iff the first coordinate (scanning x_1, ..., x_n, t) with
/// magnitude above tol * R is negative. Exact: quotient_rep(e) == quotient_rep(-e).
QuotientPoint quotient_rep(const Event& e);

struct SymmetryReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
};

/// Samples events Inside one of the four open causal sets and counts those
/// whose antipode is not Outside. Throws std::invalid_argument for equality
/// (horizon) sets, which are centrally symmetric.
SymmetryReport injectivity_check(const HalfSpaceSet& region, std::size_t samples,
                                 Sampler& sampler);

/// Checks that -e stays on Γ^-(L) (resp. Γ^+(L)) for sampled horizon events,
/// and that -e of a Γ^- event lands on Γ^+ only when x_1 = t = 0.
SymmetryReport horizon_symmetry_check(const SpacetimeContext& ctx, std::size_t samples,
                                      Sampler& sampler);

/// Random event of Γ^-(L): (s, y, s) with |y| = R and s in [-extent, extent].
Event sample_past_horizon(const SpacetimeContext& ctx, Sampler& sampler, double extent);
/// Random event of Γ^+(L): (-s, y, s).
Event sample_future_horizon(const SpacetimeContext& ctx, Sampler& sampler, double extent);

}  // namespace desitter
