#include <cmath>
#include <random>

#include "doctest.h"
#include "fracdim/cantor.hpp"
#include "fracdim/covers.hpp"
#include "fracdim/dims.hpp"
#include "fracdim/error.hpp"
#include "oracles.hpp"

using namespace fracdim;
using oracle::q;

namespace {

const double kLog23 = std::log(2.0) / std::log(3.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

std::vector<Scalar> powers(const Scalar& base, int from, int to) {
  std::vector<Scalar> out;
  for (int j = from; j <= to; ++j) out.push_back(pow_int(base, j));
  return out;
}

IntervalSet third_prefractal(std::size_t depth) {
  return cantor_prefractal(CantorSpec::constant(q(1, 3), depth), 0, depth);
}

// {0} ∪ {1/n : n <= n_max}
IntervalSet inverse_integers(long n_max) {
  std::vector<Scalar> pts{q(0)};
  for (long n = 1; n <= n_max; ++n) pts.push_back(q(1, n));
  return PointSet(std::move(pts)).to_interval_set();
}

IntervalSet prop38_set(int n_max) {
  std::vector<Scalar> pts{q(0), q(1)};
  for (int n = 1; n <= n_max; ++n) pts.push_back(pow_int(q(1, 2), n));
  return PointSet(std::move(pts)).to_interval_set();
}

}  // namespace

TEST_CASE("scale grids") {
  ScaleGrid g{q(1, 2), q(1, 2), 4};
  CHECK(g.scales() == std::vector<Scalar>{q(1, 2), q(1, 4), q(1, 8), q(1, 16)});
  CHECK(code_of([] { ScaleGrid{q(0), q(1, 2), 3}.scales(); }) == ErrorCode::NonPositiveScale);
  CHECK(code_of([] { ScaleGrid{q(1), q(1), 3}.scales(); }) == ErrorCode::ScaleOrderViolation);
  CHECK(tail_start(1) == 0);
  CHECK(tail_start(8) == 4);
  CHECK(tail_start(9) == 5);
}

TEST_CASE("box counts") {
  auto unit = box_counts(IntervalSet::unit(), ScaleGrid{q(1, 2), q(1, 2), 4});
  REQUIRE(unit.size() == 4);
  CHECK(unit[0].count == 1);
  CHECK(unit[1].count == 2);
  CHECK(unit[2].count == 4);
  CHECK(unit[3].count == 8);
  for (const auto& c : box_counts(PointSet({q(1, 3)}), ScaleGrid{q(1), q(1, 3), 6})) CHECK(c.count == 1);
  auto c10 = third_prefractal(10);
  for (int j = 1; j <= 10; ++j) {
    std::size_t n = covering_number(c10, pow_int(q(1, 3), j)).count;
    CHECK(n >= (std::size_t{1} << j) / 2);
    CHECK(n <= (std::size_t{1} << j) * 2);
  }
  CHECK(code_of([] { box_counts(IntervalSet(), ScaleGrid{q(1), q(1, 2), 3}); }) == ErrorCode::EmptySet);
}

TEST_CASE("box dimension estimates") {
  auto unit = box_counts(IntervalSet::unit(), ScaleGrid{q(1, 2), q(1, 2), 12});
  auto est = box_dimension_estimate(unit);
  CHECK(std::abs(est.lower - 1.0) <= 1e-9);
  CHECK(std::abs(est.upper - 1.0) <= 1e-9);
  CHECK(est.slopes.size() == 11);

  auto scales = powers(q(1, 3), 2, 10);
  auto third = box_dimension_estimate(box_counts(third_prefractal(12), scales));
  CHECK(std::abs(third.lower - kLog23) <= 0.03);
  CHECK(std::abs(third.upper - kLog23) <= 0.03);

  auto f1 = box_dimension_estimate(box_counts(inverse_integers(2000), powers(q(1, 4), 1, 5)));
  CHECK(std::abs(f1.upper - 0.5) <= 0.05);

  std::vector<BoxCount> short_list(3, BoxCount{q(1), 1});
  CHECK(code_of([&] { box_dimension_estimate(short_list); }) == ErrorCode::TooFewScales);
}

TEST_CASE("local cover profiles") {
  std::vector<Scalar> deltas{q(1, 4)};
  std::vector<Scalar> ratios = powers(q(1, 2), 1, 8);
  auto unit = local_cover_profile(IntervalSet::unit(), deltas, ratios);
  for (const auto& row : unit.rows) {
    Scalar full = row.delta / row.rho;
    CHECK(row.sup_count >= row.inf_count);
    CHECK(Scalar(row.sup_count) <= full + 1);
    CHECK(Scalar(2 * row.inf_count + 2) >= full);
  }

  auto p38 = prop38_set(20);
  std::vector<ScalePair> pair{{q(1, 4), pow_int(q(1, 2), 10)}};
  auto prof = local_cover_profile(p38, pair);
  REQUIRE(prof.rows.size() == 1);
  CHECK(prof.rows[0].inf_count == 1);
  CHECK(prof.rows[0].sup_count >= 8);
  // x = 0 already needs 8 balls; x = 1/4 also reaches 1/2 and needs one more
  CHECK(local_covering_number(p38, q(0), q(1, 4), pow_int(q(1, 2), 10)).count == 8);
  CHECK(prof.rows[0].sup_count == 9);
  CHECK(prof.rows[0].argmax_center == q(1, 4));
  CHECK(prof.rows[0].argmin_center == 1);

  std::vector<Scalar> bad_ratio{q(1)};
  CHECK(code_of([&] { local_cover_profile(p38, deltas, bad_ratio); }) == ErrorCode::ScaleOrderViolation);
  std::vector<ScalePair> bad_pair{{q(1, 4), q(1, 2)}};
  CHECK(code_of([&] { local_cover_profile(p38, bad_pair); }) == ErrorCode::ScaleOrderViolation);
  CHECK(code_of([&] { local_cover_profile(p38, deltas, ratios, std::vector<Scalar>{q(1, 3)}); }) ==
        ErrorCode::CenterNotInSet);

  // rows are sorted by δ then ρ
  std::vector<Scalar> two_deltas{q(1, 2), q(1, 8)};
  auto sorted = local_cover_profile(third_prefractal(6), two_deltas, ratios);
  for (std::size_t i = 0; i + 1 < sorted.rows.size(); ++i) {
    const auto& a = sorted.rows[i];
    const auto& b = sorted.rows[i + 1];
    CHECK((a.delta < b.delta || (a.delta == b.delta && a.rho < b.rho)));
  }
}

TEST_CASE("profile rows agree with direct local counts and are bounded by global counts") {
  std::mt19937 rng(23);
  std::vector<Scalar> deltas{q(1, 3), q(1, 7)};
  std::vector<Scalar> ratios{q(1, 2), q(1, 5), q(1, 11)};
  for (int trial = 0; trial < 30; ++trial) {
    IntervalSet f = oracle::random_interval_set(rng, 5, 60);
    auto prof = local_cover_profile(f, deltas, ratios);
    for (const auto& row : prof.rows) {
      CHECK(row.sup_count >= row.inf_count);
      CHECK(row.inf_count >= 1);
      CHECK(row.sup_count <= covering_number(f, row.rho).count);
      std::size_t lo = SIZE_MAX, hi = 0;
      for (const auto& x : default_candidate_centers(f)) {
        std::size_t n = local_covering_number(f, x, row.delta, row.rho).count;
        lo = std::min(lo, n);
        hi = std::max(hi, n);
      }
      CHECK(row.sup_count == hi);
      CHECK(row.inf_count == lo);
    }
  }
}

TEST_CASE("assouad estimates") {
  std::vector<Scalar> d{q(1, 9)};
  auto third = local_cover_profile(third_prefractal(10), d, powers(q(1, 3), 2, 6));
  CHECK(std::abs(assouad_estimate(third).dimension - kLog23) <= 0.03);
  CHECK(std::abs(lower_assouad_estimate(third).dimension - kLog23) <= 0.03);

  std::vector<Scalar> ud{q(1, 4)};
  auto unit = local_cover_profile(IntervalSet::unit(), ud, powers(q(1, 2), 1, 10));
  CHECK(std::abs(assouad_estimate(unit).dimension - 1.0) <= 0.02);
  CHECK(std::abs(lower_assouad_estimate(unit).dimension - 1.0) <= 0.05);

  std::vector<Scalar> fd{q(1, 4), q(1, 8), q(1, 16)};
  auto f1 = local_cover_profile(inverse_integers(2000), fd, powers(q(1, 2), 1, 8));
  CHECK(std::abs(lower_assouad_estimate(f1).dimension) <= 0.05);

  auto few = local_cover_profile(IntervalSet::unit(), ud, powers(q(1, 2), 1, 3));
  CHECK(code_of([&] { assouad_estimate(few); }) == ErrorCode::TooFewScales);
  CHECK(code_of([&] { lower_assouad_estimate(few); }) == ErrorCode::TooFewScales);
}

TEST_CASE("attainment") {
  auto scales = powers(q(1, 3), 1, 10);
  auto third = attainment_check(box_counts(third_prefractal(12), scales), kLog23);
  CHECK(third.c_high <= 4.0);
  CHECK(third.c_low <= 4.0);

  auto unit = attainment_check(IntervalSet::unit(), 1.0, ScaleGrid{q(1, 2), q(1, 2), 12});
  CHECK(unit.c_high <= 1.0 + 1e-12);
  CHECK(unit.c_low <= 2.0 + 1e-12);

  // halving-sequence set: C_high at dim 0 is the count itself and keeps growing
  auto p38 = prop38_set(30);
  double previous = 0;
  for (std::size_t depth : {6, 10, 14, 18}) {
    auto a = attainment_check(p38, 0.0, ScaleGrid{q(1, 2), q(1, 2), depth});
    CHECK(a.c_high > previous);
    previous = a.c_high;
  }
}

TEST_CASE("dimension chain") {
  DimensionReport f1{0.5, 0.5, 1.0, 0.0, {}, {}, {}, std::nullopt};
  CHECK(dimension_chain_check(f1));
  DimensionReport cantor{kLog23, kLog23, kLog23, kLog23, {}, {}, {}, std::nullopt};
  CHECK(dimension_chain_check(cantor));
  DimensionReport broken{0.5, 0.5, 0.3, 0.0, {}, {}, {}, std::nullopt};
  CHECK(!dimension_chain_check(broken));
  DimensionReport slack{0.5, 0.54, 0.5, 0.0, {}, {}, {}, std::nullopt};
  CHECK(dimension_chain_check(slack));
}

TEST_CASE("unit interval estimates agree across all four estimators") {
  IntervalSet unit = IntervalSet::unit();
  auto box = box_dimension_estimate(box_counts(unit, ScaleGrid{q(1, 2), q(1, 2), 12}));
  std::vector<Scalar> d{q(1, 4), q(1, 16)};
  auto prof = local_cover_profile(unit, d, powers(q(1, 2), 1, 10));
  DimensionReport r{box.lower, box.upper, assouad_estimate(prof).dimension,
                    lower_assouad_estimate(prof).dimension, {}, {}, {}, std::nullopt};
  for (double v : {r.lower_box, r.upper_box, r.assouad, r.lower_assouad}) CHECK(std::abs(v - 1.0) <= 0.05);
  CHECK(dimension_chain_check(r));
}

TEST_CASE("finer middle-third grids stay within tolerance") {
  IntervalSet f = third_prefractal(12);
  for (int depth = 6; depth <= 10; ++depth) {
    auto est = box_dimension_estimate(box_counts(f, powers(q(1, 3), 2, depth)));
    CHECK(std::abs(est.upper - kLog23) <= 0.03);
    CHECK(std::abs(est.lower - kLog23) <= 0.03);
  }
}
