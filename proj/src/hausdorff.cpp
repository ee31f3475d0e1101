#include "fracdim/hausdorff.hpp"

#include <algorithm>

#include "fracdim/error.hpp"

namespace fracdim {

Scalar distance_to_set(const Scalar& x, const IntervalSet& set) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "distance to empty set");
  auto parts = set.intervals();
  auto it = std::lower_bound(parts.begin(), parts.end(), x,
                             [](const Interval& piece, const Scalar& v) { return piece.hi < v; });
  if (it != parts.end() && it->lo <= x) return 0;
  Scalar best;
  bool have = false;
  if (it != parts.end()) {
    best = it->lo - x;
    have = true;
  }
  if (it != parts.begin()) {
    Scalar left = x - std::prev(it)->hi;
    if (!have || left < best) best = left;
  }
  return best;
}

Scalar hausdorff_semidistance(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "Hausdorff semi-distance of empty set");
  Scalar best = 0;
  auto consider = [&](const Scalar& x) {
    Scalar d = distance_to_set(x, b);
    if (d > best) best = d;
  };
  for (const auto& piece : a.intervals()) {
    consider(piece.lo);
    consider(piece.hi);
  }
  auto gaps = b.intervals();
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    Scalar mid = midpoint(gaps[i].hi, gaps[i + 1].lo);
    if (a.contains(mid)) consider(mid);
  }
  return best;
}

Scalar hausdorff_semidistance(const PointSet& a, const PointSet& b) {
  return hausdorff_semidistance(a.to_interval_set(), b.to_interval_set());
}
Scalar hausdorff_semidistance(const IntervalSet& a, const PointSet& b) {
  return hausdorff_semidistance(a, b.to_interval_set());
}
Scalar hausdorff_semidistance(const PointSet& a, const IntervalSet& b) {
  return hausdorff_semidistance(a.to_interval_set(), b);
}

Scalar hausdorff_distance(const IntervalSet& a, const IntervalSet& b) {
  Scalar ab = hausdorff_semidistance(a, b);
  Scalar ba = hausdorff_semidistance(b, a);
  return ab > ba ? ab : ba;
}
Scalar hausdorff_distance(const PointSet& a, const PointSet& b) {
  return hausdorff_distance(a.to_interval_set(), b.to_interval_set());
}
Scalar hausdorff_distance(const IntervalSet& a, const PointSet& b) {
  return hausdorff_distance(a, b.to_interval_set());
}
Scalar hausdorff_distance(const PointSet& a, const IntervalSet& b) {
  return hausdorff_distance(a.to_interval_set(), b);
}

}  // namespace fracdim
