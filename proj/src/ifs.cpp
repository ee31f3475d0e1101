#include "fracdim/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fracdim/error.hpp"
#include "fracdim/hausdorff.hpp"

namespace fracdim {

Similarity1D::Similarity1D(Scalar ratio_, Scalar offset_, int orientation_)
    : ratio(std::move(ratio_)), offset(std::move(offset_)), orientation(orientation_) {
  if (sgn(ratio) <= 0 || ratio >= 1) {
    throw Error(ErrorCode::RatioOutOfRange, "similarity ratio " + format_scalar(ratio) + " not in (0,1)");
  }
  if (orientation != 1 && orientation != -1) {
    throw Error(ErrorCode::RatioOutOfRange, "orientation must be +1 or -1");
  }
}

Scalar Similarity1D::operator()(const Scalar& x) const {
  return orientation > 0 ? Scalar(ratio * x + offset) : Scalar(offset - ratio * x);
}

Interval Similarity1D::image(const Interval& piece) const {
  Scalar a = (*this)(piece.lo);
  Scalar b = (*this)(piece.hi);
  return orientation > 0 ? Interval(std::move(a), std::move(b)) : Interval(std::move(b), std::move(a));
}

Scalar fixed_point(const Similarity1D& f) {
  return f.orientation > 0 ? Scalar(f.offset / (1 - f.ratio)) : Scalar(f.offset / (1 + f.ratio));
}

IndexedSystem::IndexedSystem(std::vector<std::vector<Similarity1D>> levels, bool cyclic)
    : levels_(std::move(levels)), cyclic_(cyclic) {
  if (levels_.empty()) throw Error(ErrorCode::LevelOutOfRange, "system has no levels");
  bool first = true;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].empty()) {
      throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(k + 1) + " has no maps");
    }
    for (const auto& f : levels_[k]) {
      Scalar b = abs(fixed_point(f));
      if (first) {
        sigma_lower_ = f.ratio;
        sigma_upper_ = f.ratio;
        fixed_bound_ = b;
        first = false;
        continue;
      }
      if (f.ratio < sigma_lower_) sigma_lower_ = f.ratio;
      if (f.ratio > sigma_upper_) sigma_upper_ = f.ratio;
      if (b > fixed_bound_) fixed_bound_ = b;
    }
  }
}

const std::vector<Similarity1D>& IndexedSystem::level(std::size_t k) const {
  if (k == 0 || (!cyclic_ && k > levels_.size())) {
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(k) + " outside 1.." +
                                               std::to_string(levels_.size()));
  }
  return levels_[(k - 1) % levels_.size()];
}

IntervalSet apply_level(const IndexedSystem& sys, std::size_t k, const IntervalSet& b) {
  const auto& maps = sys.level(k + 1);
  std::vector<Interval> images;
  images.reserve(maps.size() * b.size());
  for (const auto& f : maps) {
    for (const auto& piece : b.intervals()) images.push_back(f.image(piece));
  }
  return IntervalSet(std::move(images));
}

IntervalSet compose_chain(const IndexedSystem& sys, std::size_t k, std::size_t l,
                          const IntervalSet& b) {
  if (l < k) {
    throw Error(ErrorCode::LevelOutOfRange,
                "compose_chain needs k <= l, got " + std::to_string(k) + " > " + std::to_string(l));
  }
  if (l > sys.horizon()) {
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(l) + " past the horizon");
  }
  IntervalSet out = b;
  for (std::size_t j = l; j > k; --j) out = apply_level(sys, j - 1, out);
  return out;
}

Scalar attractor_seed_radius(const IndexedSystem& sys) {
  const Scalar& sigma = sys.sigma_star_upper();
  return 2 * (1 + sigma) * sys.fixed_point_bound() / (1 - sigma);
}

PullbackTrace pullback_approximation(const IndexedSystem& sys, std::size_t k, std::size_t m,
                                     const IntervalSet& seed) {
  if (seed.empty()) throw Error(ErrorCode::EmptySet, "pullback seed is empty");
  if (k > sys.horizon() || m > sys.horizon() - k) {
    throw Error(ErrorCode::LevelOutOfRange, "pullback needs levels past the horizon");
  }
  PullbackTrace trace;
  const Scalar two_r = 2 * attractor_seed_radius(sys);
  IntervalSet previous = seed;
  Scalar power = 1;
  for (std::size_t j = 0; j < m; ++j) {
    IntervalSet next = compose_chain(sys, k, k + j + 1, seed);
    Scalar d = hausdorff_distance(previous, next);
    Scalar bound = power * two_r;
    if (d > bound) {
      throw Error(ErrorCode::DecayViolation, "d_" + std::to_string(j) + " = " + format_scalar(d) +
                                                 " exceeds (σ*)^j·2R = " + format_scalar(bound));
    }
    trace.decay.push_back(std::move(d));
    trace.bounds.push_back(std::move(bound));
    power *= sys.sigma_star_upper();
    previous = std::move(next);
  }
  trace.set = std::move(previous);
  return trace;
}

Word Word::empty(std::size_t start_level) {
  Word w;
  w.start_level = start_level;
  w.end_level = start_level;
  return w;
}

Scalar Word::apply(const Scalar& x) const {
  return orientation > 0 ? Scalar(ratio * x + offset) : Scalar(offset - ratio * x);
}

Interval Word::image(const Interval& piece) const {
  Scalar a = apply(piece.lo);
  Scalar b = apply(piece.hi);
  return orientation > 0 ? Interval(std::move(a), std::move(b)) : Interval(std::move(b), std::move(a));
}

Word Word::extended(const IndexedSystem& sys, std::size_t index) const {
  std::size_t next_level = end_level + 1;
  if (next_level > sys.horizon()) {
    throw Error(ErrorCode::HorizonExceeded, "word extension past level " + std::to_string(end_level));
  }
  const auto& maps = sys.level(next_level);
  if (index >= maps.size()) {
    throw Error(ErrorCode::LevelOutOfRange, "map index " + std::to_string(index) + " not in level " +
                                                std::to_string(next_level));
  }
  const Similarity1D& f = maps[index];
  Word out = *this;
  out.entries.push_back({next_level, index});
  out.end_level = next_level;
  out.offset = orientation > 0 ? Scalar(offset + ratio * f.offset) : Scalar(offset - ratio * f.offset);
  out.ratio = ratio * f.ratio;
  out.orientation = orientation * f.orientation;
  return out;
}

Word Word::truncated(const IndexedSystem& sys) const {
  Word out = Word::empty(start_level);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) out = out.extended(sys, entries[i].index);
  return out;
}

bool MoranCertificate::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const MoranLevelCheck& c) { return c.passed(); });
}

MoranCertificate verify_mosc(const IndexedSystem& sys, std::span<const OpenSet> open_sets,
                             const Scalar& epsilon0, std::size_t check_levels) {
  MoranCertificate cert;
  cert.open_sets.assign(open_sets.begin(), open_sets.end());
  cert.epsilon0 = epsilon0;
  cert.eta = 0;
  cert.disjointness_reading = "images of U^{k+1} under the maps of level k+1 are pairwise disjoint";
  if (open_sets.empty()) return cert;

  const bool replicated = open_sets.size() == 1;
  std::size_t levels = check_levels;
  if (levels == 0) {
    levels = replicated ? (sys.cyclic() ? sys.stored_levels() : sys.horizon()) : open_sets.size() - 1;
  }
  if (!replicated) levels = std::min(levels, open_sets.size() - 1);
  levels = std::min(levels, sys.horizon());

  for (const auto& u : open_sets) {
    Scalar d = u.closure_diameter();
    if (d > cert.eta) cert.eta = d;
  }
  auto open_at = [&](std::size_t k) -> const OpenSet& {
    return replicated ? open_sets.front() : open_sets[k];
  };

  for (std::size_t k = 0; k < levels; ++k) {
    MoranLevelCheck check;
    check.level = k;
    const OpenSet& outer = open_at(k);
    const OpenSet& inner = open_at(k + 1);
    const auto& maps = sys.level(k + 1);

    struct Image {
      std::size_t map;
      Interval piece;
    };
    std::vector<Image> images;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      for (const auto& c : inner.components()) {
        Interval img = maps[i].image(c);
        if (check.nested && !outer.contains_open(img)) {
          check.nested = false;
          check.escape_witness = img;
        }
        images.push_back({i, std::move(img)});
      }
    }
    for (std::size_t a = 0; a < images.size() && check.disjoint; ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        if (images[a].map == images[b].map) continue;
        const Interval& p = images[a].piece;
        const Interval& q = images[b].piece;
        const Scalar& lo = p.lo > q.lo ? p.lo : q.lo;
        const Scalar& hi = p.hi < q.hi ? p.hi : q.hi;
        if (lo < hi) {
          check.disjoint = false;
          check.overlap_witness = Interval(lo, hi);
          break;
        }
      }
    }
    check.measure = outer.length();
    check.large = check.measure >= epsilon0 && sgn(epsilon0) > 0;
    cert.checks.push_back(std::move(check));
  }
  return cert;
}

double moran_exponent(std::span<const Scalar> ratios) {
  if (ratios.empty()) throw Error(ErrorCode::EmptyRatios, "moran_exponent needs at least one ratio");
  std::vector<double> logs;
  logs.reserve(ratios.size());
  for (const auto& r : ratios) {
    if (sgn(r) <= 0 || r >= 1) {
      throw Error(ErrorCode::RatioOutOfRange, "ratio " + format_scalar(r) + " not in (0,1)");
    }
    logs.push_back(log_of(r));
  }
  if (ratios.size() == 1) return 0.0;
  auto excess = [&](double s) {
    double total = 0;
    for (double l : logs) total += std::exp(s * l);
    return total - 1.0;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (excess(hi) >= 0) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1e-14 * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double level_power_sum(const IndexedSystem& sys, std::size_t level, double s) {
  double total = 0;
  for (const auto& f : sys.level(level)) total += std::pow(to_double(f.ratio), s);
  return total;
}

HippoReport hippo_check(const IndexedSystem& sys, double s, std::size_t horizon) {
  HippoReport report;
  report.passed = true;
  for (std::size_t k = 1; k <= horizon; ++k) {
    double r = level_power_sum(sys, k, s) - 1.0;
    report.residuals.push_back(r);
    if (std::fabs(r) > 1e-9) report.passed = false;
  }
  return report;
}

namespace {

double window_extreme(const std::vector<double>& prefix, std::size_t n0, std::size_t horizon,
                      std::vector<AveragedMoranRow>* rows) {
  double worst = 0;
  for (std::size_t n = std::max<std::size_t>(n0, 1); n <= horizon; ++n) {
    AveragedMoranRow row;
    row.n = n;
    bool first = true;
    for (std::size_t k = 0; k + n <= horizon; ++k) {
      double sum = prefix[k + n] - prefix[k];
      if (first || sum < row.min_log_sum) row.min_log_sum = sum;
      if (first || sum > row.max_log_sum) row.max_log_sum = sum;
      first = false;
      worst = std::max(worst, std::fabs(sum));
    }
    if (rows) rows->push_back(row);
  }
  return worst;
}

}  // namespace

AveragedMoranReport averaged_moran_check(const IndexedSystem& sys, double s, std::size_t n0,
                                         std::size_t horizon) {
  std::vector<double> prefix(horizon + 1, 0.0);
  for (std::size_t j = 1; j <= horizon; ++j) {
    prefix[j] = prefix[j - 1] + std::log(level_power_sum(sys, j, s));
  }
  AveragedMoranReport report;
  report.l_observed = std::exp(window_extreme(prefix, n0, horizon, &report.rows));
  report.l_half_horizon = std::exp(window_extreme(prefix, n0, horizon / 2, nullptr));
  report.diverging = report.l_observed > 1.1 * report.l_half_horizon;
  return report;
}

std::vector<Word> cylinder_decomposition(const IndexedSystem& sys, std::size_t k,
                                         const Scalar& delta, const Scalar& eta) {
  if (sgn(delta) <= 0 || delta > eta) {
    throw Error(ErrorCode::ScaleOrderViolation,
                "need 0 < delta <= eta, got delta=" + format_scalar(delta) + " eta=" + format_scalar(eta));
  }
  std::vector<Word> out;
  std::function<void(const Word&)> descend = [&](const Word& word) {
    if (word.length() > 0 && word.ratio * eta < delta) {
      out.push_back(word);
      return;
    }
    std::size_t next_level = word.end_level + 1;
    if (next_level > sys.horizon()) {
      throw Error(ErrorCode::HorizonExceeded,
                  "stopping time needs level " + std::to_string(next_level));
    }
    const std::size_t count = sys.level(next_level).size();
    for (std::size_t i = 0; i < count; ++i) descend(word.extended(sys, i));
  };
  descend(Word::empty(k));
  return out;
}

CylinderConstants cylinder_count_constants(const Scalar& eta, const Scalar& epsilon0,
                                           const Scalar& sigma_lower, double s) {
  CylinderConstants c;
  const double eta_d = to_double(eta);
  const double sigma_d = to_double(sigma_lower);
  c.kappa0 = 2.0 * (2.0 * eta_d / sigma_d) / to_double(epsilon0);
  c.kappa1 = std::pow(eta_d, s);
  c.kappa2 = c.kappa0 * std::pow(eta_d / sigma_d, s);
  return c;
}

NaturalMeasureWeight natural_measure_weight(const Word& word, double s) {
  NaturalMeasureWeight w;
  w.word = word;
  w.s = s;
  w.weight = word.length() == 0 ? 1.0 : std::exp(s * log_of(word.ratio));
  return w;
}

}  // namespace fracdim
