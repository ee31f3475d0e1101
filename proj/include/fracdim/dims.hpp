#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracdim/sets.hpp"

namespace fracdim {

/// δ_j = base · factor^j for j = 0, ..., depth − 1.
struct ScaleGrid {
  Scalar base;
  Scalar factor;
  std::size_t depth = 0;

  /// Throws NonPositiveScale / ScaleOrderViolation for base <= 0 or factor
  /// outside (0, 1).
  std::vector<Scalar> scales() const;
};

/// First index of the tail used for limsup/liminf estimates: the last
/// max(1, count/2) entries of a sequence of length count.
std::size_t tail_start(std::size_t count);

struct BoxCount {
  Scalar delta;
  std::size_t count = 0;
};

std::vector<BoxCount> box_counts(const IntervalSet& f, std::span<const Scalar> scales);
std::vector<BoxCount> box_counts(const IntervalSet& f, const ScaleGrid& grid);
std::vector<BoxCount> box_counts(const PointSet& f, const ScaleGrid& grid);

struct BoxDimensionEstimate {
  double lower = 0;
  double upper = 0;
  std::vector<double> slopes;  // two-point slopes between consecutive scales
  std::size_t tail_from = 0;   // first slope index in the tail
};

/// Upper = max, lower = min of the tail two-point slopes of log N against
/// log(1/δ). Needs >= 4 scales (TooFewScales).
BoxDimensionEstimate box_dimension_estimate(std::span<const BoxCount> counts);

struct ProfileRow {
  Scalar delta;
  Scalar rho;
  std::size_t sup_count = 0;
  std::size_t inf_count = 0;
  Scalar argmax_center;
  Scalar argmin_center;
};

/// sup/inf over sampled centres x of N(B_δ(x) ∩ F, ρ); rows sorted by δ then ρ.
/// Sampled sup is a lower bound for the true supremum, sampled inf an upper
/// bound for the true infimum.
struct LocalCoverProfile {
  std::vector<ProfileRow> rows;
  std::string center_family;
};

struct ScalePair {
  Scalar delta;
  Scalar rho;
};

/// Every (δ, ρ = δ·r) for δ in delta_grid, r in ratio_grid. Each r must lie in
/// (0, 1) (ScaleOrderViolation). Without explicit centres the family is
/// default_candidate_centers(F); explicit centres must lie in F
/// (CenterNotInSet).
LocalCoverProfile local_cover_profile(const IntervalSet& f, std::span<const Scalar> delta_grid,
                                      std::span<const Scalar> ratio_grid,
                                      std::optional<std::vector<Scalar>> centers = std::nullopt);

/// Same for an explicit list of (δ, ρ) pairs, each with 0 < ρ < δ.
LocalCoverProfile local_cover_profile(const IntervalSet& f, std::span<const ScalePair> pairs,
                                      std::optional<std::vector<Scalar>> centers = std::nullopt);

struct AssouadEstimate {
  double dimension = 0;
  double constant = 0;              // fitted C for the power law at `dimension`
  std::vector<double> log_ratios;   // distinct log(δ/ρ), ascending
  std::vector<double> log_counts;   // log of sup (or inf) count at each ratio
  std::vector<double> slopes;
  std::size_t tail_from = 0;
};

/// Max tail two-point slope of log sup_count against log(δ/ρ); rows sharing a
/// ratio are merged by taking the largest count. Needs min_ratios distinct
/// ratios (TooFewScales).
AssouadEstimate assouad_estimate(const LocalCoverProfile& profile, std::size_t min_ratios = 4);

/// Min tail two-point slope of log inf_count against log(δ/ρ); rows sharing a
/// ratio are merged by taking the smallest count.
AssouadEstimate lower_assouad_estimate(const LocalCoverProfile& profile,
                                       std::size_t min_ratios = 4);

struct Attainment {
  double c_low = 0;   // C_low^-1 δ^-dim <= N(F, δ)
  double c_high = 0;  // N(F, δ) <= C_high δ^-dim
};

Attainment attainment_check(std::span<const BoxCount> counts, double dim);
Attainment attainment_check(const IntervalSet& f, double dim, const ScaleGrid& grid);

struct DimensionReport {
  double lower_box = 0;
  double upper_box = 0;
  double assouad = 0;
  double lower_assouad = 0;
  std::vector<double> box_slopes;
  std::vector<double> assouad_slopes;
  std::vector<double> lower_assouad_slopes;
  std::optional<Attainment> attainment;
};

inline constexpr double kEstimatorSlack = 0.05;

/// lower_assouad <= lower_box <= upper_box <= assouad, each with slack.
bool dimension_chain_check(const DimensionReport& report, double slack = kEstimatorSlack);

}  // namespace fracdim
