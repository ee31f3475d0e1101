#include "fracdim/cantor.hpp"

#include <bit>
#include <cmath>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

void check_ratio(const Scalar& c) {
  if (sgn(c) <= 0 || c >= Scalar(1, 2)) {
    throw Error(ErrorCode::RatioOutOfRange, "Cantor ratio " + format_scalar(c) + " not in (0,1/2)");
  }
}

void check_horizon(const CantorSpec& spec, std::size_t k, std::size_t n) {
  if (k > spec.horizon() || n > spec.horizon() - k) {
    throw Error(ErrorCode::HorizonExceeded, "k + n = " + std::to_string(k) + " + " + std::to_string(n) +
                                                " exceeds horizon " + std::to_string(spec.horizon()));
  }
}

}  // namespace

CantorSpec::CantorSpec(CantorKind kind, std::vector<Scalar> ratios, std::size_t horizon)
    : kind_(kind), ratios_(std::move(ratios)), horizon_(horizon) {
  for (const auto& c : ratios_) check_ratio(c);
  if (kind_ != CantorKind::BlocksProp37 && ratios_.empty()) {
    throw Error(ErrorCode::RatioOutOfRange, "Cantor spec without ratios");
  }
}

CantorSpec CantorSpec::constant(Scalar ratio, std::size_t horizon) {
  return CantorSpec(CantorKind::Constant, {std::move(ratio)}, horizon);
}

CantorSpec CantorSpec::explicit_ratios(std::vector<Scalar> ratios, std::size_t horizon) {
  return CantorSpec(CantorKind::Explicit, std::move(ratios), horizon);
}

CantorSpec CantorSpec::dyadic_blocks(std::size_t horizon) {
  return CantorSpec(CantorKind::BlocksProp37, {}, horizon);
}

Scalar CantorSpec::ratio(std::size_t k) const {
  if (k == 0 || k > horizon_) {
    throw Error(ErrorCode::HorizonExceeded,
                "ratio index " + std::to_string(k) + " outside 1.." + std::to_string(horizon_));
  }
  switch (kind_) {
    case CantorKind::Constant:
      return ratios_.front();
    case CantorKind::Explicit:
      return ratios_[(k - 1) % ratios_.size()];
    case CantorKind::BlocksProp37: {
      // Even bit width - 1 puts k in [2^(2(n-1)), 2^(2n-1)).
      auto top_bit = std::bit_width(k) - 1;
      return top_bit % 2 == 0 ? Scalar(1, 3) : Scalar(1, 9);
    }
  }
  return ratios_.front();
}

CantorSpec prop37_spec(std::size_t horizon) { return CantorSpec::dyadic_blocks(horizon); }

IntervalSet gen_step(const IntervalSet& c, const Scalar& lambda) {
  check_ratio(lambda);
  std::vector<Interval> out;
  out.reserve(2 * c.size());
  for (const auto& piece : c.intervals()) {
    Scalar keep = lambda * piece.length();
    out.emplace_back(piece.lo, piece.lo + keep);
    out.emplace_back(piece.hi - keep, piece.hi);
  }
  return IntervalSet(std::move(out));
}

IntervalSet cantor_prefractal(const CantorSpec& spec, std::size_t k, std::size_t n) {
  check_horizon(spec, k, n);
  IntervalSet out = IntervalSet::unit();
  for (std::size_t j = k + 1; j <= k + n; ++j) out = gen_step(out, spec.ratio(j));
  return out;
}

PiProduct pi_product(const CantorSpec& spec, std::size_t k, std::size_t n) {
  check_horizon(spec, k, n);
  PiProduct p{k, n, 1};
  for (std::size_t j = k + 1; j <= k + n; ++j) p.value *= spec.ratio(j);
  return p;
}

std::vector<Scalar> pi_products(const CantorSpec& spec, std::size_t k, std::size_t n_max) {
  check_horizon(spec, k, n_max);
  std::vector<Scalar> out;
  out.reserve(n_max + 1);
  out.emplace_back(1);
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(out.back() * spec.ratio(k + n));
  return out;
}

std::vector<BoxSequencePoint> cantor_box_sequence(const CantorSpec& spec, std::size_t k,
                                                  std::size_t n_max) {
  auto pis = pi_products(spec, k, n_max);
  const double log2 = std::log(2.0);
  std::vector<BoxSequencePoint> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back({n, static_cast<double>(n) * log2 / -log_of(pis[n])});
  }
  return out;
}

IndexedSystem cantor_to_ifs(const CantorSpec& spec) {
  auto level_for = [](const Scalar& c) {
    return std::vector<Similarity1D>{Similarity1D(c, 0), Similarity1D(c, 1 - c)};
  };
  if (spec.kind() == CantorKind::Constant) {
    return IndexedSystem({level_for(spec.ratio(1))}, true);
  }
  std::vector<std::vector<Similarity1D>> levels;
  levels.reserve(spec.horizon());
  for (std::size_t k = 1; k <= spec.horizon(); ++k) levels.push_back(level_for(spec.ratio(k)));
  return IndexedSystem(std::move(levels), false);
}

}  // namespace fracdim
