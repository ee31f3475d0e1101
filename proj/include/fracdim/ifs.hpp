#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracdim/sets.hpp"

namespace fracdim {

/// x ↦ ratio·(orientation·x) + offset with ratio in (0, 1).
struct Similarity1D {
  Scalar ratio;
  Scalar offset;
  int orientation = 1;

  Similarity1D() = default;
  /// Throws RatioOutOfRange unless 0 < ratio < 1 and orientation is ±1.
  Similarity1D(Scalar ratio, Scalar offset, int orientation = 1);

  Scalar operator()(const Scalar& x) const;
  Interval image(const Interval& piece) const;

  friend bool operator==(const Similarity1D&, const Similarity1D&) = default;
};

/// The unique x with f(x) = x.
Scalar fixed_point(const Similarity1D& f);

/// Non-autonomous system of similarities. Level k (k = 1, 2, ...) holds the
/// maps indexed by I_k. A cyclic system repeats its stored levels forever;
/// an autonomous system is the cyclic case with a single level.
class IndexedSystem {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  IndexedSystem(std::vector<std::vector<Similarity1D>> levels, bool cyclic);

  /// Maps of level k >= 1. Throws LevelOutOfRange past the horizon.
  const std::vector<Similarity1D>& level(std::size_t k) const;

  bool cyclic() const { return cyclic_; }
  bool autonomous() const { return cyclic_ && levels_.size() == 1; }
  /// Number of stored levels (the period of a cyclic system).
  std::size_t stored_levels() const { return levels_.size(); }
  /// Largest usable level index.
  std::size_t horizon() const { return cyclic_ ? kUnbounded : levels_.size(); }
  const std::vector<std::vector<Similarity1D>>& levels() const { return levels_; }

  const Scalar& sigma_star_lower() const { return sigma_lower_; }
  const Scalar& sigma_star_upper() const { return sigma_upper_; }
  /// M = sup over all maps of |fixed point|.
  const Scalar& fixed_point_bound() const { return fixed_bound_; }

  friend bool operator==(const IndexedSystem& a, const IndexedSystem& b) {
    return a.cyclic_ == b.cyclic_ && a.levels_ == b.levels_;
  }

 private:
  std::vector<std::vector<Similarity1D>> levels_;
  bool cyclic_;
  Scalar sigma_lower_;
  Scalar sigma_upper_;
  Scalar fixed_bound_;
};

/// S^k(B): union of the images of B under the maps of level k + 1.
IntervalSet apply_level(const IndexedSystem& sys, std::size_t k, const IntervalSet& b);

/// S^{k,l}(B) = S^k ∘ ... ∘ S^{l-1}(B); S^{k,k}(B) = B.
IntervalSet compose_chain(const IndexedSystem& sys, std::size_t k, std::size_t l,
                          const IntervalSet& b);

/// R = 2(1 + σ*)M / (1 − σ*).
Scalar attractor_seed_radius(const IndexedSystem& sys);

struct PullbackTrace {
  IntervalSet set;             // K_m = S^{k,k+m}(seed)
  std::vector<Scalar> decay;   // d_j = ρ_H(K_j, K_{j+1}), j < m
  std::vector<Scalar> bounds;  // (σ*)^j · 2R
};

/// Throws LevelOutOfRange, or DecayViolation when some d_j exceeds its bound.
PullbackTrace pullback_approximation(const IndexedSystem& sys, std::size_t k, std::size_t m,
                                     const IntervalSet& seed);

/// One entry of a word: map `index` of level `level`.
struct WordEntry {
  std::size_t level;
  std::size_t index;
  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// α = (i_{k+1}, ..., i_n) in J^{k,n} with f_α = f_{i_{k+1}} ∘ ... ∘ f_{i_n}.
struct Word {
  std::vector<WordEntry> entries;
  std::size_t start_level = 0;  // k_α
  std::size_t end_level = 0;    // n_α
  Scalar ratio = 1;             // σ_α
  int orientation = 1;
  Scalar offset = 0;

  static Word empty(std::size_t start_level);

  std::size_t length() const { return entries.size(); }
  Scalar apply(const Scalar& x) const;
  Interval image(const Interval& piece) const;
  /// α followed by map `index` of level end_level + 1.
  Word extended(const IndexedSystem& sys, std::size_t index) const;
  /// α′, the word without its last entry.
  Word truncated(const IndexedSystem& sys) const;
};

struct MoranLevelCheck {
  std::size_t level = 0;         // k: checks U^k against maps of level k + 1
  bool nested = true;            // S^k(U^{k+1}) ⊆ U^k
  bool disjoint = true;          // images of U^{k+1} pairwise disjoint
  bool large = true;             // λ(U^k) >= ε0
  Scalar measure;                // λ(U^k)
  std::optional<Interval> overlap_witness;
  std::optional<Interval> escape_witness;

  bool passed() const { return nested && disjoint && large; }
};

struct MoranCertificate {
  std::vector<OpenSet> open_sets;
  Scalar epsilon0;
  Scalar eta;  // sup diam of the closures of U^k
  std::vector<MoranLevelCheck> checks;
  /// Which index convention condition (ii) was checked under.
  std::string disjointness_reading;

  bool passed() const;
};

/// Checks the three Moran open-set conditions level by level. A single
/// open set stands for U^k at every level. check_levels = 0 means: the
/// period of a cyclic system, the horizon otherwise (and open_sets.size() - 1
/// when one set per level is supplied).
MoranCertificate verify_mosc(const IndexedSystem& sys, std::span<const OpenSet> open_sets,
                             const Scalar& epsilon0, std::size_t check_levels = 0);

/// The s >= 0 with Σ σ_i^s = 1 (bisection, 1e-12). Throws EmptyRatios, or
/// RatioOutOfRange for ratios outside (0, 1).
double moran_exponent(std::span<const Scalar> ratios);

/// Σ_i σ_i^s over the maps of one level.
double level_power_sum(const IndexedSystem& sys, std::size_t level, double s);

struct HippoReport {
  std::vector<double> residuals;  // residuals[k-1] = Σ_{I_k} σ^s − 1
  bool passed = false;            // all |r_k| <= 1e-9
};

HippoReport hippo_check(const IndexedSystem& sys, double s, std::size_t horizon);

struct AveragedMoranRow {
  std::size_t n = 0;
  double min_log_sum = 0;  // min over k of log Σ_{J^{k,k+n}} σ_α^s
  double max_log_sum = 0;
};

struct AveragedMoranReport {
  double l_observed = 1;       // smallest L with L^-1 <= Σ <= L on the window
  double l_half_horizon = 1;   // same, restricted to the first half of the horizon
  std::vector<AveragedMoranRow> rows;
  /// L grows by more than 10% between half and full horizon.
  bool diverging = false;
};

/// Window sums factor over levels: Σ_{α∈J^{k,k+n}} σ_α^s = Π_{j=k+1}^{k+n} Σ_{I_j} σ_i^s.
AveragedMoranReport averaged_moran_check(const IndexedSystem& sys, double s, std::size_t n0,
                                         std::size_t horizon);

/// Stopping-time antichain J^k_δ = {α : σ_α η < δ <= σ_α′ η} (empty truncation
/// has ratio 1), in lexicographic order. Throws ScaleOrderViolation unless
/// 0 < δ <= η, HorizonExceeded when stopping needs levels past the horizon.
std::vector<Word> cylinder_decomposition(const IndexedSystem& sys, std::size_t k,
                                         const Scalar& delta, const Scalar& eta);

/// Constants bounding card(J^k_δ) in dimension one (unit ball length 2):
/// κ0 = 2(2η/σ*)/ε0, κ1 = η^s, κ2 = κ0 (η/σ*)^s. Diagnostics, not sharp.
struct CylinderConstants {
  double kappa0 = 0;
  double kappa1 = 0;
  double kappa2 = 0;
};

CylinderConstants cylinder_count_constants(const Scalar& eta, const Scalar& epsilon0,
                                           const Scalar& sigma_lower, double s);

struct NaturalMeasureWeight {
  Word word;
  double s = 0;
  double weight = 1;  // σ_α^s
};

NaturalMeasureWeight natural_measure_weight(const Word& word, double s);

}  // namespace fracdim
