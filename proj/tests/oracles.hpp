#pragma once

// Test-only reference computations. Nothing here calls the library routine
// it is used to check.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fracdim/cantor.hpp"
#include "fracdim/sets.hpp"

namespace oracle {

using fracdim::Interval;
using fracdim::IntervalSet;
using fracdim::PointSet;
using fracdim::Scalar;

inline Scalar q(long p, long d = 1) {
  Scalar v(p, d);
  v.canonicalize();
  return v;
}

/// Distance from x to a closed set by a linear scan.
inline Scalar distance(const Scalar& x, const IntervalSet& b) {
  Scalar best = -1;
  for (const auto& piece : b.intervals()) {
    Scalar d = x < piece.lo ? Scalar(piece.lo - x) : x > piece.hi ? Scalar(x - piece.hi) : Scalar(0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

/// sup over a fine rational grid of A (plus all endpoints) of distance to B.
inline Scalar sampled_semidistance(const IntervalSet& a, const IntervalSet& b, long steps) {
  Scalar best = 0;
  for (const auto& piece : a.intervals()) {
    for (long i = 0; i <= steps; ++i) {
      Scalar x = piece.lo + (piece.hi - piece.lo) * Scalar(i, steps);
      Scalar d = distance(x, b);
      if (d > best) best = d;
    }
  }
  return best;
}

/// A ⊆ B for closed interval sets, by scanning.
inline bool subset(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& p : a.intervals()) {
    bool inside = false;
    for (const auto& c : b.intervals()) {
      if (c.lo <= p.lo && p.hi <= c.hi) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

/// Random interval set with up to `max_pieces` pieces, endpoints k/den in [0, 1].
inline IntervalSet random_interval_set(std::mt19937& rng, int max_pieces, long den) {
  std::uniform_int_distribution<int> pieces(1, max_pieces);
  std::uniform_int_distribution<long> pos(0, den);
  std::vector<Interval> raw;
  int n = pieces(rng);
  for (int i = 0; i < n; ++i) {
    long a = pos(rng);
    long b = pos(rng);
    if (a > b) std::swap(a, b);
    raw.emplace_back(q(a, den), q(b, den));
  }
  return IntervalSet(std::move(raw));
}

inline PointSet random_point_set(std::mt19937& rng, int max_points, long den) {
  std::uniform_int_distribution<int> count(1, max_points);
  std::uniform_int_distribution<long> pos(0, den);
  std::vector<Scalar> pts;
  int n = count(rng);
  for (int i = 0; i < n; ++i) pts.push_back(q(pos(rng), den));
  return PointSet(std::move(pts));
}

/// Generalised Cantor prefractal C^k_n by binary addresses: the interval with
/// address (b_1..b_n) starts at Σ_j b_j (1 − c_{k+j}) π(k, j−1).
inline IntervalSet cantor_by_addresses(const fracdim::CantorSpec& spec, std::size_t k, std::size_t n) {
  std::vector<Scalar> pis{1};
  for (std::size_t j = 1; j <= n; ++j) pis.push_back(pis.back() * spec.ratio(k + j));
  std::vector<Interval> raw;
  for (unsigned long addr = 0; addr < (1UL << n); ++addr) {
    Scalar lo = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if ((addr >> (n - j)) & 1UL) lo += (1 - spec.ratio(k + j)) * pis[j - 1];
    }
    raw.emplace_back(lo, lo + pis[n]);
  }
  return IntervalSet(std::move(raw));
}

/// Balls [c − r, c + r] cover every point of F (checked on interval ends and
/// on every gap between consecutive balls that lies inside F).
inline bool balls_cover(const IntervalSet& f, const std::vector<Scalar>& centers, const Scalar& r) {
  std::vector<Interval> balls;
  for (const auto& c : centers) balls.emplace_back(c - r, c + r);
  IntervalSet cover(std::move(balls));
  return subset(f, cover);
}

/// Largest subset of a small point set whose gaps all exceed 2r.
inline std::size_t packing_bruteforce(const PointSet& f, const Scalar& r) {
  const auto& pts = f.points();
  std::size_t n = pts.size(), best = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::size_t used = 0;
    bool ok = true;
    const Scalar* last = nullptr;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (last && pts[i] - *last <= 2 * r) ok = false;
      last = &pts[i];
      ++used;
    }
    if (ok) best = std::max(best, used);
  }
  return best;
}

}  // namespace oracle
