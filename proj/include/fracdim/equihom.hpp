#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fracdim/dims.hpp"
#include "fracdim/ifs.hpp"

namespace fracdim {

enum class Verdict { Bounded, Growing, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct EquihomRow {
  Scalar delta;
  Scalar rho;
  std::size_t sup_count = 0;  // sup_x N(B_δ(x) ∩ F, ρ)
  std::size_t inf_count = 0;  // inf_x N(B_{c1 δ}(x) ∩ F, c2 ρ)
  double ratio = 1;
  Scalar argmax_center;
  Scalar argmin_center;
};

/// Finite-scale evidence for equi-homogeneity. max_ratio is a lower bound
/// for the best constant M at these (c1, c2), since centres are sampled.
struct EquihomReport {
  std::vector<EquihomRow> rows;
  std::string center_family;
  Scalar c1 = 1;
  Scalar c2 = 1;
  double max_ratio = 1;
  /// Least-squares slope of log ratio against log(1/ρ) over all rows.
  double growth_fit = 0;
  /// Per distinct ρ, decreasing: largest ratio over δ, and its running max.
  std::vector<Scalar> rho_values;
  std::vector<double> ratio_by_rho;
  std::vector<double> running_max;
  Verdict verdict = Verdict::Inconclusive;
};

inline constexpr double kGrowingFitThreshold = 0.1;
inline constexpr double kBoundedStability = 0.10;

/// Growing: growth_fit > 0.1 and the per-ρ ratio is non-decreasing over the
/// last half of the ρ values. Bounded: the running max grows by at most 10%
/// over that last half. Otherwise inconclusive. Needs 0 < c2 <= 1 <= c1
/// (ScaleOrderViolation).
EquihomReport equihom_certify(const IntervalSet& f, std::span<const Scalar> delta_grid,
                              std::span<const Scalar> ratio_grid, const Scalar& c1 = 1,
                              const Scalar& c2 = 1,
                              std::optional<std::vector<Scalar>> centers = std::nullopt);

EquihomReport equihom_certify(const IntervalSet& f, std::span<const ScalePair> pairs,
                              const Scalar& c1 = 1, const Scalar& c2 = 1,
                              std::optional<std::vector<Scalar>> centers = std::nullopt);

/// Assouad estimate from local covers at the single point x. Only meaningful
/// when F is equi-homogeneous: then one point already shows the uniform
/// scaling.
AssouadEstimate equihom_singlepoint_assouad(const IntervalSet& f, const Scalar& x,
                                            std::span<const Scalar> delta_grid,
                                            std::span<const Scalar> ratio_grid);

/// Critical-pair variant; two pairs suffice for one slope.
AssouadEstimate equihom_singlepoint_assouad(const IntervalSet& f, const Scalar& x,
                                            std::span<const ScalePair> pairs);

struct RegularitySample {
  Scalar x;
  Scalar delta;
  double inner_measure = 0;  // weight of depth-D cylinders inside B_δ(x)
  double outer_measure = 0;  // weight of depth-D cylinders meeting the open ball
  double ratio_low = 0;      // inner / δ^s
  double ratio_high = 0;     // outer / δ^s
};

struct RegularityReport {
  double s = 0;
  std::size_t sample_depth = 0;
  std::vector<RegularitySample> samples;
  /// Smallest C >= 1 with every bracket inside [C^-1, C].
  double c_observed = 1;
};

/// Brackets μ(B_δ(x) ∩ F) for the natural measure of an autonomous system
/// between inner and outer sums of depth-`sample_depth` cylinder weights σ_α^s.
/// Centres are images of map fixed points under words of length <= 2; radii
/// are diam·σ_max^j for j <= sample_depth − 2. Cylinders are images of the
/// closed hull of the certificate's open set. Throws NotAutonomous,
/// ExponentMismatch (|s − Moran exponent| > 1e-9), InvariantViolation when the
/// certificate fails.
RegularityReport ahlfors_regularity_check(const IndexedSystem& sys, const MoranCertificate& cert,
                                          double s, std::size_t sample_depth);

}  // namespace fracdim
