#include "fracdim/equihom.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fracdim/covers.hpp"
#include "fracdim/error.hpp"

namespace fracdim {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Bounded: return "bounded";
    case Verdict::Growing: return "growing";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  if (xs.size() < 2) return 0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx == 0 ? 0 : sxy / sxx;
}

EquihomReport certify_pairs(const IntervalSet& f, std::vector<ScalePair> pairs, const Scalar& c1,
                            const Scalar& c2, std::optional<std::vector<Scalar>> centers) {
  if (sgn(c2) <= 0 || c2 > 1 || c1 < 1) {
    throw Error(ErrorCode::ScaleOrderViolation, "need 0 < c2 <= 1 <= c1");
  }
  const bool scaled = c1 != 1 || c2 != 1;
  LocalCoverProfile sup_side = local_cover_profile(f, pairs, centers);
  LocalCoverProfile inf_side;
  if (scaled) {
    std::vector<ScalePair> adjusted;
    adjusted.reserve(pairs.size());
    for (const auto& p : pairs) adjusted.push_back({c1 * p.delta, c2 * p.rho});
    inf_side = local_cover_profile(f, adjusted, centers);
  }

  EquihomReport report;
  report.c1 = c1;
  report.c2 = c2;
  report.center_family = sup_side.center_family;
  std::vector<double> xs, ys;
  std::map<Scalar, double, std::greater<>> by_rho;
  for (std::size_t i = 0; i < sup_side.rows.size(); ++i) {
    const ProfileRow& hi = sup_side.rows[i];
    // Both profiles sort by (δ, ρ); scaling by positive constants keeps the order.
    const ProfileRow& lo = scaled ? inf_side.rows[i] : hi;
    EquihomRow row;
    row.delta = hi.delta;
    row.rho = hi.rho;
    row.sup_count = hi.sup_count;
    row.inf_count = lo.inf_count;
    row.ratio = static_cast<double>(hi.sup_count) / static_cast<double>(lo.inf_count);
    row.argmax_center = hi.argmax_center;
    row.argmin_center = lo.argmin_center;
    report.max_ratio = std::max(report.max_ratio, row.ratio);
    xs.push_back(-log_of(row.rho));
    ys.push_back(std::log(row.ratio));
    auto [it, inserted] = by_rho.emplace(row.rho, row.ratio);
    if (!inserted) it->second = std::max(it->second, row.ratio);
    report.rows.push_back(std::move(row));
  }
  report.growth_fit = least_squares_slope(xs, ys);

  double running = 0;
  for (const auto& [rho, ratio] : by_rho) {
    report.rho_values.push_back(rho);
    report.ratio_by_rho.push_back(ratio);
    running = std::max(running, ratio);
    report.running_max.push_back(running);
  }
  const std::size_t m = report.ratio_by_rho.size();
  const std::size_t from = tail_start(m);
  bool monotone_tail = m - from >= 2;
  for (std::size_t i = from + 1; i < m; ++i) {
    if (report.ratio_by_rho[i] < report.ratio_by_rho[i - 1]) monotone_tail = false;
  }
  const double before_tail = report.running_max[from == 0 ? 0 : from - 1];
  const bool stable = report.running_max.back() <= (1.0 + kBoundedStability) * before_tail;
  if (report.growth_fit > kGrowingFitThreshold && monotone_tail) {
    report.verdict = Verdict::Growing;
  } else if (stable && m >= 2) {
    report.verdict = Verdict::Bounded;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace

EquihomReport equihom_certify(const IntervalSet& f, std::span<const Scalar> delta_grid,
                              std::span<const Scalar> ratio_grid, const Scalar& c1,
                              const Scalar& c2, std::optional<std::vector<Scalar>> centers) {
  std::vector<ScalePair> pairs;
  for (const auto& r : ratio_grid) {
    if (sgn(r) <= 0 || r >= 1) {
      throw Error(ErrorCode::ScaleOrderViolation, "rho/delta ratio " + format_scalar(r) + " not in (0,1)");
    }
  }
  for (const auto& d : delta_grid) {
    for (const auto& r : ratio_grid) pairs.push_back({d, d * r});
  }
  return certify_pairs(f, std::move(pairs), c1, c2, std::move(centers));
}

EquihomReport equihom_certify(const IntervalSet& f, std::span<const ScalePair> pairs,
                              const Scalar& c1, const Scalar& c2,
                              std::optional<std::vector<Scalar>> centers) {
  return certify_pairs(f, std::vector<ScalePair>(pairs.begin(), pairs.end()), c1, c2,
                       std::move(centers));
}

AssouadEstimate equihom_singlepoint_assouad(const IntervalSet& f, const Scalar& x,
                                            std::span<const Scalar> delta_grid,
                                            std::span<const Scalar> ratio_grid) {
  if (!f.contains(x)) throw Error(ErrorCode::CenterNotInSet, format_scalar(x) + " is not in F");
  auto profile = local_cover_profile(f, delta_grid, ratio_grid, std::vector<Scalar>{x});
  return assouad_estimate(profile);
}

AssouadEstimate equihom_singlepoint_assouad(const IntervalSet& f, const Scalar& x,
                                            std::span<const ScalePair> pairs) {
  if (!f.contains(x)) throw Error(ErrorCode::CenterNotInSet, format_scalar(x) + " is not in F");
  auto profile = local_cover_profile(f, pairs, std::vector<Scalar>{x});
  return assouad_estimate(profile, 2);
}

RegularityReport ahlfors_regularity_check(const IndexedSystem& sys, const MoranCertificate& cert,
                                          double s, std::size_t sample_depth) {
  if (!sys.autonomous()) {
    throw Error(ErrorCode::NotAutonomous, "Ahlfors-David check needs a single repeated level");
  }
  std::vector<Scalar> ratios;
  for (const auto& f : sys.level(1)) ratios.push_back(f.ratio);
  double exponent = moran_exponent(ratios);
  if (std::fabs(exponent - s) > 1e-9) {
    throw Error(ErrorCode::ExponentMismatch,
                "s = " + std::to_string(s) + " but the Moran exponent is " + std::to_string(exponent));
  }
  if (!cert.passed() || cert.open_sets.empty()) {
    throw Error(ErrorCode::InvariantViolation, "Moran open-set certificate did not pass");
  }
  const auto& components = cert.open_sets.front().components();
  const Interval hull(components.front().lo, components.back().hi);

  // Cylinders of length sample_depth.
  std::vector<Word> words{Word::empty(0)};
  for (std::size_t depth = 0; depth < sample_depth; ++depth) {
    std::vector<Word> next;
    next.reserve(words.size() * sys.level(1).size());
    for (const auto& w : words) {
      for (std::size_t i = 0; i < sys.level(depth + 1).size(); ++i) next.push_back(w.extended(sys, i));
    }
    words = std::move(next);
  }
  std::vector<Interval> images;
  std::vector<double> weights;
  images.reserve(words.size());
  for (const auto& w : words) {
    images.push_back(w.image(hull));
    weights.push_back(natural_measure_weight(w, s).weight);
  }

  // Sample centres: images of fixed points under words of length <= 2.
  std::vector<Scalar> centers;
  std::vector<Word> prefixes{Word::empty(0)};
  for (std::size_t len = 0; len <= 2; ++len) {
    std::vector<Word> next;
    for (const auto& w : prefixes) {
      for (const auto& f : sys.level(1)) centers.push_back(w.apply(fixed_point(f)));
      if (len < 2) {
        for (std::size_t i = 0; i < sys.level(1).size(); ++i) next.push_back(w.extended(sys, i));
      }
    }
    prefixes = std::move(next);
  }
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

  Scalar sigma_max = sys.sigma_star_upper();
  RegularityReport report;
  report.s = s;
  report.sample_depth = sample_depth;
  Scalar delta = hull.length();
  const std::size_t radii = sample_depth >= 2 ? sample_depth - 1 : 1;
  for (std::size_t j = 0; j < radii; ++j, delta *= sigma_max) {
    const double scale = std::exp(s * log_of(delta));
    for (const auto& x : centers) {
      RegularitySample sample;
      sample.x = x;
      sample.delta = delta;
      Scalar lo = x - delta;
      Scalar hi = x + delta;
      for (std::size_t c = 0; c < images.size(); ++c) {
        const Interval& img = images[c];
        if (img.lo >= lo && img.hi <= hi) sample.inner_measure += weights[c];
        if (img.lo < hi && img.hi > lo) sample.outer_measure += weights[c];
      }
      sample.ratio_low = sample.inner_measure / scale;
      sample.ratio_high = sample.outer_measure / scale;
      report.c_observed = std::max(report.c_observed, sample.ratio_high);
      if (sample.ratio_low > 0) report.c_observed = std::max(report.c_observed, 1.0 / sample.ratio_low);
      report.samples.push_back(std::move(sample));
    }
  }
  return report;
}

}  // namespace fracdim
