#include "fracdim/sets.hpp"

#include <algorithm>

#include "fracdim/error.hpp"

namespace fracdim {

Interval::Interval(Scalar lo_, Scalar hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) {
    throw Error(ErrorCode::MalformedInterval,
                "[" + format_scalar(lo) + ", " + format_scalar(hi) + "] has lo > hi");
  }
}

IntervalSet interval_set_normalize(std::vector<Interval> raw) {
  return IntervalSet(std::move(raw));
}

IntervalSet::IntervalSet(std::vector<Interval> raw) {
  for (const auto& piece : raw) {
    if (piece.lo > piece.hi) {
      throw Error(ErrorCode::MalformedInterval,
                  "[" + format_scalar(piece.lo) + ", " + format_scalar(piece.hi) + "] has lo > hi");
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& piece : raw) {
    if (!intervals_.empty() && piece.lo <= intervals_.back().hi) {
      if (piece.hi > intervals_.back().hi) intervals_.back().hi = std::move(piece.hi);
    } else {
      intervals_.push_back(std::move(piece));
    }
  }
}

const Scalar& IntervalSet::min() const {
  if (empty()) throw Error(ErrorCode::EmptySet, "min of empty interval set");
  return intervals_.front().lo;
}

const Scalar& IntervalSet::max() const {
  if (empty()) throw Error(ErrorCode::EmptySet, "max of empty interval set");
  return intervals_.back().hi;
}

Scalar IntervalSet::length() const {
  Scalar total = 0;
  for (const auto& piece : intervals_) total += piece.hi - piece.lo;
  return total;
}

Scalar IntervalSet::diameter() const { return empty() ? Scalar(0) : Scalar(max() - min()); }

bool IntervalSet::contains(const Scalar& x) const {
  // First interval whose hi is >= x.
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Interval& piece, const Scalar& v) { return piece.hi < v; });
  return it != intervals_.end() && it->lo <= x;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  for (const auto& piece : other.intervals()) {
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), piece.lo,
                               [](const Interval& p, const Scalar& v) { return p.hi < v; });
    if (it == intervals_.end() || it->lo > piece.lo || it->hi < piece.hi) return false;
  }
  return true;
}

PointSet::PointSet(std::vector<Scalar> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Scalar& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

IntervalSet PointSet::to_interval_set() const {
  std::vector<Interval> raw;
  raw.reserve(points_.size());
  for (const auto& p : points_) raw.emplace_back(p, p);
  return IntervalSet(std::move(raw));
}

OpenSet::OpenSet(std::vector<Interval> components) {
  for (const auto& piece : components) {
    if (piece.lo >= piece.hi) {
      throw Error(ErrorCode::MalformedInterval,
                  "open interval (" + format_scalar(piece.lo) + ", " + format_scalar(piece.hi) +
                      ") is empty");
    }
  }
  std::sort(components.begin(), components.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& piece : components) {
    if (!components_.empty() && piece.lo < components_.back().hi) {
      if (piece.hi > components_.back().hi) components_.back().hi = std::move(piece.hi);
    } else {
      components_.push_back(std::move(piece));
    }
  }
}

Scalar OpenSet::length() const {
  Scalar total = 0;
  for (const auto& piece : components_) total += piece.hi - piece.lo;
  return total;
}

Scalar OpenSet::closure_diameter() const {
  return empty() ? Scalar(0) : Scalar(components_.back().hi - components_.front().lo);
}

bool OpenSet::contains_open(const Interval& piece) const {
  return std::any_of(components_.begin(), components_.end(), [&](const Interval& c) {
    return c.lo <= piece.lo && piece.hi <= c.hi;
  });
}

}  // namespace fracdim
