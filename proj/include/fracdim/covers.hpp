#pragma once

#include <vector>

#include "fracdim/sets.hpp"

namespace fracdim {

/// A cover or packing count together with the greedy witness centers.
struct CoverCount {
  std::size_t count = 0;
  std::vector<Scalar> centers;
};

/// Minimum number of closed delta-balls centred in F that cover F (1-D greedy
/// sweep). Throws EmptySet / NonPositiveScale.
CoverCount covering_number(const IntervalSet& f, const Scalar& delta);
CoverCount covering_number(const PointSet& f, const Scalar& delta);

/// Maximum number of pairwise disjoint closed delta-balls centred in F.
/// Disjointness of closed balls needs centre gaps strictly above 2*delta.
CoverCount packing_number(const IntervalSet& f, const Scalar& delta);
CoverCount packing_number(const PointSet& f, const Scalar& delta);

/// N(B_delta(x) ∩ F, rho), centres constrained to B_delta(x) ∩ F.
/// Throws CenterNotInSet, ScaleOrderViolation (rho >= delta), NonPositiveScale.
CoverCount local_covering_number(const IntervalSet& f, const Scalar& x, const Scalar& delta,
                                 const Scalar& rho);
CoverCount local_covering_number(const PointSet& f, const Scalar& x, const Scalar& delta,
                                 const Scalar& rho);

/// B_delta(x) ∩ F as an interval set (may be a single point).
IntervalSet ball_intersection(const IntervalSet& f, const Scalar& x, const Scalar& delta);

/// Exact minimum cover by dynamic programming over the sorted points: the
/// leftmost uncovered point must lie in some ball centred within delta of
/// it. Test oracle only; throws TooLarge when |F| > 24.
CoverCount covering_number_bruteforce(const PointSet& f, const Scalar& delta);

/// N(F, 2δ) <= P(F, δ) <= N(F, δ) and P(F, 2δ) <= N(F, δ) for the computed values.
bool verify_cover_packing_sandwich(const IntervalSet& f, const Scalar& delta);
bool verify_cover_packing_sandwich(const PointSet& f, const Scalar& delta);

/// N(B_δ(x)∩F, ρ) <= N(B_δ(x)∩F, r) * sup_y N(B_r(y)∩F, ρ), with y ranging
/// over the default candidate centres of F plus the witness centres of the
/// r-cover. Trivially true when rho >= delta.
bool verify_refinement(const IntervalSet& f, const Scalar& x, const Scalar& delta,
                       const Scalar& r, const Scalar& rho);

/// Candidate centres used for sup/inf over x in F: every interval endpoint
/// and midpoint (for a point set, every point). Sorted, duplicate-free.
std::vector<Scalar> default_candidate_centers(const IntervalSet& f);

namespace detail {

/// Covering count of F ∩ [lo, hi] where F is given by canonical intervals.
/// The window must meet F.
CoverCount cover_window(std::span<const Interval> parts, const Scalar& lo, const Scalar& hi,
                        const Scalar& delta);

/// Count-only variant of cover_window; skips witness allocation.
std::size_t cover_window_count(std::span<const Interval> parts, const Scalar& lo,
                               const Scalar& hi, const Scalar& delta);

}  // namespace detail

}  // namespace fracdim
