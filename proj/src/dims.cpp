#include "fracdim/dims.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fracdim/covers.hpp"
#include "fracdim/error.hpp"
#include "fracdim/parallel.hpp"

namespace fracdim {

std::vector<Scalar> ScaleGrid::scales() const {
  if (sgn(base) <= 0) throw Error(ErrorCode::NonPositiveScale, "grid base must be positive");
  if (sgn(factor) <= 0 || factor >= 1) {
    throw Error(ErrorCode::ScaleOrderViolation, "grid factor must lie in (0,1)");
  }
  std::vector<Scalar> out;
  out.reserve(depth);
  Scalar delta = base;
  for (std::size_t j = 0; j < depth; ++j) {
    out.push_back(delta);
    delta *= factor;
  }
  return out;
}

std::size_t tail_start(std::size_t count) {
  std::size_t keep = std::max<std::size_t>(1, count / 2);
  return count > keep ? count - keep : 0;
}

std::vector<BoxCount> box_counts(const IntervalSet& f, std::span<const Scalar> scales) {
  if (f.empty()) throw Error(ErrorCode::EmptySet, "box_counts of empty set");
  std::vector<BoxCount> out(scales.size());
  parallel_for(scales.size(), [&](std::size_t j) {
    if (sgn(scales[j]) <= 0) throw Error(ErrorCode::NonPositiveScale, "grid scale must be positive");
    out[j] = {scales[j], detail::cover_window_count(f.intervals(), f.min(), f.max(), scales[j])};
  });
  return out;
}

std::vector<BoxCount> box_counts(const IntervalSet& f, const ScaleGrid& grid) {
  auto scales = grid.scales();
  return box_counts(f, scales);
}

std::vector<BoxCount> box_counts(const PointSet& f, const ScaleGrid& grid) {
  return box_counts(f.to_interval_set(), grid);
}

BoxDimensionEstimate box_dimension_estimate(std::span<const BoxCount> counts) {
  if (counts.size() < 4) {
    throw Error(ErrorCode::TooFewScales, "box dimension needs at least 4 scales");
  }
  BoxDimensionEstimate est;
  for (std::size_t j = 0; j + 1 < counts.size(); ++j) {
    double rise = std::log(static_cast<double>(counts[j + 1].count)) -
                  std::log(static_cast<double>(counts[j].count));
    double run = log_of(counts[j].delta) - log_of(counts[j + 1].delta);
    est.slopes.push_back(rise / run);
  }
  est.tail_from = tail_start(est.slopes.size());
  auto tail_begin = est.slopes.begin() + static_cast<std::ptrdiff_t>(est.tail_from);
  est.upper = *std::max_element(tail_begin, est.slopes.end());
  est.lower = *std::min_element(tail_begin, est.slopes.end());
  return est;
}

namespace {

std::vector<Scalar> resolve_centers(const IntervalSet& f, std::optional<std::vector<Scalar>> centers,
                                    std::string* family) {
  if (!centers) {
    *family = "interval endpoints and midpoints";
    return default_candidate_centers(f);
  }
  for (const auto& x : *centers) {
    if (!f.contains(x)) throw Error(ErrorCode::CenterNotInSet, format_scalar(x) + " is not in F");
  }
  *family = "explicit (" + std::to_string(centers->size()) + " centres)";
  return std::move(*centers);
}

LocalCoverProfile profile_over_pairs(const IntervalSet& f, std::vector<ScalePair> pairs,
                                     std::optional<std::vector<Scalar>> centers) {
  if (f.empty()) throw Error(ErrorCode::EmptySet, "profile of empty set");
  for (const auto& p : pairs) {
    if (sgn(p.rho) <= 0) throw Error(ErrorCode::NonPositiveScale, "rho must be positive");
    if (p.rho >= p.delta) {
      throw Error(ErrorCode::ScaleOrderViolation,
                  "need rho < delta, got rho=" + format_scalar(p.rho) + " delta=" + format_scalar(p.delta));
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const ScalePair& a, const ScalePair& b) {
    return a.delta != b.delta ? a.delta < b.delta : a.rho < b.rho;
  });
  LocalCoverProfile profile;
  std::vector<Scalar> xs = resolve_centers(f, std::move(centers), &profile.center_family);
  if (xs.empty()) throw Error(ErrorCode::EmptySet, "no candidate centres");

  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (xs.size() + kChunk - 1) / kChunk;
  std::vector<std::size_t> counts(pairs.size() * xs.size());
  auto parts = f.intervals();
  parallel_for(pairs.size() * chunks, [&](std::size_t task) {
    std::size_t row = task / chunks;
    std::size_t begin = (task % chunks) * kChunk;
    std::size_t end = std::min(begin + kChunk, xs.size());
    const ScalePair& p = pairs[row];
    for (std::size_t c = begin; c < end; ++c) {
      counts[row * xs.size() + c] =
          detail::cover_window_count(parts, xs[c] - p.delta, xs[c] + p.delta, p.rho);
    }
  });

  profile.rows.reserve(pairs.size());
  for (std::size_t row = 0; row < pairs.size(); ++row) {
    ProfileRow r;
    r.delta = pairs[row].delta;
    r.rho = pairs[row].rho;
    std::size_t best_hi = 0;
    std::size_t best_lo = 0;
    for (std::size_t c = 0; c < xs.size(); ++c) {
      std::size_t n = counts[row * xs.size() + c];
      if (n > counts[row * xs.size() + best_hi]) best_hi = c;
      if (n < counts[row * xs.size() + best_lo]) best_lo = c;
    }
    r.sup_count = counts[row * xs.size() + best_hi];
    r.inf_count = counts[row * xs.size() + best_lo];
    r.argmax_center = xs[best_hi];
    r.argmin_center = xs[best_lo];
    profile.rows.push_back(std::move(r));
  }
  return profile;
}

AssouadEstimate slope_estimate(const LocalCoverProfile& profile, std::size_t min_ratios,
                               bool upper) {
  // Merge rows by exact δ/ρ.
  std::map<Scalar, std::size_t> merged;
  for (const auto& row : profile.rows) {
    Scalar ratio = row.delta / row.rho;
    std::size_t n = upper ? row.sup_count : row.inf_count;
    auto [it, inserted] = merged.emplace(ratio, n);
    if (!inserted) it->second = upper ? std::max(it->second, n) : std::min(it->second, n);
  }
  if (merged.size() < std::max<std::size_t>(min_ratios, 2)) {
    throw Error(ErrorCode::TooFewScales, "need at least " + std::to_string(min_ratios) +
                                             " distinct delta/rho ratios, have " +
                                             std::to_string(merged.size()));
  }
  AssouadEstimate est;
  for (const auto& [ratio, n] : merged) {
    est.log_ratios.push_back(log_of(ratio));
    est.log_counts.push_back(std::log(static_cast<double>(n)));
  }
  for (std::size_t i = 0; i + 1 < est.log_ratios.size(); ++i) {
    est.slopes.push_back((est.log_counts[i + 1] - est.log_counts[i]) /
                         (est.log_ratios[i + 1] - est.log_ratios[i]));
  }
  est.tail_from = tail_start(est.slopes.size());
  auto tail_begin = est.slopes.begin() + static_cast<std::ptrdiff_t>(est.tail_from);
  est.dimension = upper ? *std::max_element(tail_begin, est.slopes.end())
                        : *std::min_element(tail_begin, est.slopes.end());
  // Upper: N <= C (δ/ρ)^s. Lower: N >= C^-1 (δ/ρ)^s.
  est.constant = 0;
  for (std::size_t i = 0; i < est.log_ratios.size(); ++i) {
    double gap = est.log_counts[i] - est.dimension * est.log_ratios[i];
    est.constant = std::max(est.constant, std::exp(upper ? gap : -gap));
  }
  return est;
}

}  // namespace

LocalCoverProfile local_cover_profile(const IntervalSet& f, std::span<const Scalar> delta_grid,
                                      std::span<const Scalar> ratio_grid,
                                      std::optional<std::vector<Scalar>> centers) {
  std::vector<ScalePair> pairs;
  pairs.reserve(delta_grid.size() * ratio_grid.size());
  for (const auto& r : ratio_grid) {
    if (sgn(r) <= 0 || r >= 1) {
      throw Error(ErrorCode::ScaleOrderViolation, "rho/delta ratio " + format_scalar(r) + " not in (0,1)");
    }
  }
  for (const auto& d : delta_grid) {
    if (sgn(d) <= 0) throw Error(ErrorCode::NonPositiveScale, "delta must be positive");
    for (const auto& r : ratio_grid) pairs.push_back({d, d * r});
  }
  return profile_over_pairs(f, std::move(pairs), std::move(centers));
}

LocalCoverProfile local_cover_profile(const IntervalSet& f, std::span<const ScalePair> pairs,
                                      std::optional<std::vector<Scalar>> centers) {
  return profile_over_pairs(f, std::vector<ScalePair>(pairs.begin(), pairs.end()), std::move(centers));
}

AssouadEstimate assouad_estimate(const LocalCoverProfile& profile, std::size_t min_ratios) {
  return slope_estimate(profile, min_ratios, true);
}

AssouadEstimate lower_assouad_estimate(const LocalCoverProfile& profile, std::size_t min_ratios) {
  return slope_estimate(profile, min_ratios, false);
}

Attainment attainment_check(std::span<const BoxCount> counts, double dim) {
  Attainment a;
  for (const auto& c : counts) {
    // log(N δ^dim)
    double gap = std::log(static_cast<double>(c.count)) + dim * log_of(c.delta);
    a.c_high = std::max(a.c_high, std::exp(gap));
    a.c_low = std::max(a.c_low, std::exp(-gap));
  }
  return a;
}

Attainment attainment_check(const IntervalSet& f, double dim, const ScaleGrid& grid) {
  auto counts = box_counts(f, grid);
  return attainment_check(counts, dim);
}

bool dimension_chain_check(const DimensionReport& r, double slack) {
  return r.lower_assouad <= r.lower_box + slack && r.lower_box <= r.upper_box + slack &&
         r.upper_box <= r.assouad + slack;
}

}  // namespace fracdim
