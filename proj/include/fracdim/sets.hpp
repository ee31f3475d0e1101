#pragma once

#include <span>
#include <vector>

#include "fracdim/scalar.hpp"

namespace fracdim {

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  Scalar lo;
  Scalar hi;

  Interval() = default;
  /// Throws Error(MalformedInterval) when lo > hi.
  Interval(Scalar lo, Scalar hi);

  Scalar length() const { return hi - lo; }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals in canonical form: sorted, with
/// I.hi < J.lo for consecutive members. Touching intervals are merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Normalizes. Throws Error(MalformedInterval) for any lo > hi.
  explicit IntervalSet(std::vector<Interval> raw);

  static IntervalSet unit() { return IntervalSet({Interval(0, 1)}); }

  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  /// Requires non-empty.
  const Scalar& min() const;
  const Scalar& max() const;

  Scalar length() const;
  Scalar diameter() const;
  bool contains(const Scalar& x) const;
  bool contains(const class IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Sort-and-merge sweep over raw intervals.
IntervalSet interval_set_normalize(std::vector<Interval> raw);

/// Finite sorted, duplicate-free set of points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Scalar> points);

  std::span<const Scalar> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Scalar& x) const;

  /// Same set viewed as degenerate intervals.
  IntervalSet to_interval_set() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Scalar> points_;
};

/// Finite union of open intervals (lo, hi) with lo < hi. Overlapping pieces
/// merge; touching pieces stay separate, since the shared endpoint is not in
/// the union.
class OpenSet {
 public:
  OpenSet() = default;
  explicit OpenSet(std::vector<Interval> components);

  static OpenSet unit() { return OpenSet({Interval(0, 1)}); }

  std::span<const Interval> components() const { return components_; }
  bool empty() const { return components_.empty(); }
  Scalar length() const;
  /// Diameter of the closure.
  Scalar closure_diameter() const;
  /// True iff the open interval (lo, hi) is contained in this set.
  bool contains_open(const Interval& piece) const;

  friend bool operator==(const OpenSet&, const OpenSet&) = default;

 private:
  std::vector<Interval> components_;
};

}  // namespace fracdim
