#include "fracdim/covers.hpp"

#include <algorithm>
#include <limits>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

using Parts = std::span<const Interval>;

// First index whose interval has hi >= t.
std::size_t first_reaching(Parts parts, const Scalar& t) {
  return static_cast<std::size_t>(
      std::lower_bound(parts.begin(), parts.end(), t,
                       [](const Interval& p, const Scalar& v) { return p.hi < v; }) -
      parts.begin());
}

// First index whose interval has hi > t.
std::size_t first_beyond(Parts parts, const Scalar& t) {
  return static_cast<std::size_t>(
      std::upper_bound(parts.begin(), parts.end(), t,
                       [](const Scalar& v, const Interval& p) { return v < p.hi; }) -
      parts.begin());
}

// Number of intervals with lo <= t.
std::size_t count_starting_by(Parts parts, const Scalar& t) {
  return static_cast<std::size_t>(
      std::upper_bound(parts.begin(), parts.end(), t,
                       [](const Scalar& v, const Interval& p) { return v < p.lo; }) -
      parts.begin());
}

void require_positive(const Scalar& delta) {
  if (sgn(delta) <= 0) {
    throw Error(ErrorCode::NonPositiveScale, "scale must be positive, got " + format_scalar(delta));
  }
}

template <bool kWitness>
std::size_t greedy_cover(Parts parts, const Scalar& lo, const Scalar& hi, const Scalar& delta,
                         std::vector<Scalar>* centers) {
  std::size_t i = first_reaching(parts, lo);
  if (i == parts.size() || parts[i].lo > hi) {
    throw Error(ErrorCode::EmptySet, "covering an empty set");
  }
  Scalar p = parts[i].lo > lo ? parts[i].lo : lo;
  Scalar reach;
  Scalar center;
  std::size_t count = 0;
  for (;;) {
    // Largest point of F ∩ [lo, hi] that is <= p + delta.
    reach = p + delta;
    if (reach > hi) reach = hi;
    std::size_t j = count_starting_by(parts, reach) - 1;
    center = parts[j].hi < reach ? parts[j].hi : reach;
    ++count;
    if constexpr (kWitness) centers->push_back(center);
    reach = center + delta;
    if (reach >= hi) break;
    std::size_t k = first_beyond(parts, reach);
    if (k == parts.size() || parts[k].lo > hi) break;
    // Infimum of the uncovered remainder; covered itself when it equals reach,
    // which is harmless because F is closed.
    p = parts[k].lo > reach ? parts[k].lo : reach;
  }
  return count;
}

}  // namespace

namespace detail {

CoverCount cover_window(Parts parts, const Scalar& lo, const Scalar& hi, const Scalar& delta) {
  CoverCount out;
  out.count = greedy_cover<true>(parts, lo, hi, delta, &out.centers);
  return out;
}

std::size_t cover_window_count(Parts parts, const Scalar& lo, const Scalar& hi,
                               const Scalar& delta) {
  return greedy_cover<false>(parts, lo, hi, delta, nullptr);
}

}  // namespace detail

CoverCount covering_number(const IntervalSet& f, const Scalar& delta) {
  if (f.empty()) throw Error(ErrorCode::EmptySet, "covering_number of empty set");
  require_positive(delta);
  return detail::cover_window(f.intervals(), f.min(), f.max(), delta);
}

CoverCount covering_number(const PointSet& f, const Scalar& delta) {
  return covering_number(f.to_interval_set(), delta);
}

CoverCount packing_number(const IntervalSet& f, const Scalar& delta) {
  if (f.empty()) throw Error(ErrorCode::EmptySet, "packing_number of empty set");
  require_positive(delta);
  Parts parts = f.intervals();
  const Scalar gap = 2 * delta;

  // Centres are value + k*eps for an infinitesimal eps; the greedy picks the
  // leftmost admissible centre each time. min_slack bounds how large eps may
  // be made when the witness is written out.
  struct Pick {
    Scalar value;
    std::size_t eps;
  };
  std::vector<Pick> picks;
  picks.push_back({f.min(), 0});
  Scalar min_slack;
  bool have_slack = false;
  auto note_slack = [&](const Scalar& s) {
    if (!have_slack || s < min_slack) {
      min_slack = s;
      have_slack = true;
    }
  };
  for (;;) {
    const Pick& last = picks.back();
    Scalar t = last.value + gap;
    std::size_t k = first_beyond(parts, t);
    if (k == parts.size()) break;
    if (parts[k].lo > t) {
      note_slack(parts[k].lo - t);
      picks.push_back({parts[k].lo, 0});
    } else {
      note_slack(parts[k].hi - t);
      picks.push_back({t, last.eps + 1});
    }
  }

  CoverCount out;
  out.count = picks.size();
  Scalar eps = have_slack ? Scalar(min_slack / (2 * (out.count + 1))) : Scalar(0);
  out.centers.reserve(picks.size());
  for (const auto& pick : picks) out.centers.push_back(pick.value + eps * pick.eps);
  return out;
}

CoverCount packing_number(const PointSet& f, const Scalar& delta) {
  return packing_number(f.to_interval_set(), delta);
}

IntervalSet ball_intersection(const IntervalSet& f, const Scalar& x, const Scalar& delta) {
  Scalar lo = x - delta;
  Scalar hi = x + delta;
  Parts parts = f.intervals();
  std::vector<Interval> out;
  for (std::size_t i = first_reaching(parts, lo); i < parts.size() && parts[i].lo <= hi; ++i) {
    out.emplace_back(parts[i].lo > lo ? parts[i].lo : lo, parts[i].hi < hi ? parts[i].hi : hi);
  }
  return IntervalSet(std::move(out));
}

CoverCount local_covering_number(const IntervalSet& f, const Scalar& x, const Scalar& delta,
                                 const Scalar& rho) {
  require_positive(delta);
  require_positive(rho);
  if (rho >= delta) {
    throw Error(ErrorCode::ScaleOrderViolation,
                "need rho < delta, got rho=" + format_scalar(rho) + " delta=" + format_scalar(delta));
  }
  if (!f.contains(x)) throw Error(ErrorCode::CenterNotInSet, format_scalar(x) + " is not in F");
  return detail::cover_window(f.intervals(), x - delta, x + delta, rho);
}

CoverCount local_covering_number(const PointSet& f, const Scalar& x, const Scalar& delta,
                                 const Scalar& rho) {
  return local_covering_number(f.to_interval_set(), x, delta, rho);
}

CoverCount covering_number_bruteforce(const PointSet& f, const Scalar& delta) {
  if (f.empty()) throw Error(ErrorCode::EmptySet, "covering_number_bruteforce of empty set");
  if (f.size() > 24) throw Error(ErrorCode::TooLarge, "brute-force oracle accepts at most 24 points");
  require_positive(delta);
  auto pts = f.points();
  const std::size_t n = pts.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  // best[i]: fewest balls covering pts[i..n) given pts[0..i) covered and pts[i] not.
  std::vector<std::size_t> best(n + 1, kInf);
  std::vector<std::size_t> choice(n, 0);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar d = pts[j] - pts[i];
      if (abs(d) > delta) continue;
      std::size_t next = i;
      while (next < n && pts[next] <= pts[j] + delta) ++next;
      if (best[next] != kInf && best[next] + 1 < best[i]) {
        best[i] = best[next] + 1;
        choice[i] = j;
      }
    }
  }
  CoverCount out;
  out.count = best[0];
  for (std::size_t i = 0; i < n;) {
    std::size_t j = choice[i];
    out.centers.push_back(pts[j]);
    while (i < n && pts[i] <= pts[j] + delta) ++i;
  }
  return out;
}

bool verify_cover_packing_sandwich(const IntervalSet& f, const Scalar& delta) {
  // N(F,2d) <= P(F,2d) fails for closed balls (F = {0, 3d}); a maximal
  // d-packing is what yields a 2d-cover, so the lower link uses P(F,d).
  Scalar twice = 2 * delta;
  std::size_t n2 = covering_number(f, twice).count;
  std::size_t p1 = packing_number(f, delta).count;
  std::size_t p2 = packing_number(f, twice).count;
  std::size_t n1 = covering_number(f, delta).count;
  return n2 <= p1 && p1 <= n1 && p2 <= n1;
}

bool verify_cover_packing_sandwich(const PointSet& f, const Scalar& delta) {
  return verify_cover_packing_sandwich(f.to_interval_set(), delta);
}

std::vector<Scalar> default_candidate_centers(const IntervalSet& f) {
  std::vector<Scalar> out;
  out.reserve(3 * f.size());
  for (const auto& piece : f.intervals()) {
    out.push_back(piece.lo);
    if (piece.lo != piece.hi) {
      out.push_back(midpoint(piece.lo, piece.hi));
      out.push_back(piece.hi);
    }
  }
  return out;
}

bool verify_refinement(const IntervalSet& f, const Scalar& x, const Scalar& delta,
                       const Scalar& r, const Scalar& rho) {
  require_positive(delta);
  require_positive(r);
  require_positive(rho);
  if (!f.contains(x)) throw Error(ErrorCode::CenterNotInSet, format_scalar(x) + " is not in F");
  if (rho >= delta) return true;
  Parts parts = f.intervals();
  std::size_t lhs = detail::cover_window_count(parts, x - delta, x + delta, rho);
  CoverCount middle = detail::cover_window(parts, x - delta, x + delta, r);
  std::size_t sup_inner = 1;
  if (rho < r) {
    std::vector<Scalar> ys = default_candidate_centers(f);
    ys.insert(ys.end(), middle.centers.begin(), middle.centers.end());
    for (const auto& y : ys) {
      sup_inner = std::max(sup_inner, detail::cover_window_count(parts, y - r, y + r, rho));
    }
  }
  return lhs <= middle.count * sup_inner;
}

}  // namespace fracdim
