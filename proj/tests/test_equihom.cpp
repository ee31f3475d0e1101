#include <cmath>

#include "doctest.h"
#include "fracdim/cantor.hpp"
#include "fracdim/equihom.hpp"
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

IntervalSet prop38_set(int n_max) {
  std::vector<Scalar> pts{q(0), q(1)};
  for (int n = 1; n <= n_max; ++n) pts.push_back(pow_int(q(1, 2), n));
  return PointSet(std::move(pts)).to_interval_set();
}

IndexedSystem middle_third() {
  return IndexedSystem({{Similarity1D(q(1, 3), q(0)), Similarity1D(q(1, 3), q(2, 3))}}, true);
}

IndexedSystem halves() {
  return IndexedSystem({{Similarity1D(q(1, 2), q(0)), Similarity1D(q(1, 2), q(1, 2))}}, true);
}

MoranCertificate unit_certificate(const IndexedSystem& sys) {
  std::vector<OpenSet> unit{OpenSet::unit()};
  return verify_mosc(sys, unit, q(1));
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Bounded) == "bounded");
  CHECK(to_string(Verdict::Growing) == "growing");
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("middle third is bounded") {
  auto f = third_prefractal(10);
  auto deltas = powers(q(1, 3), 2, 4);
  auto ratios = powers(q(1, 3), 1, 5);
  auto report = equihom_certify(f, deltas, ratios);
  CHECK(report.verdict == Verdict::Bounded);
  CHECK(report.max_ratio >= 1.0);
  CHECK(report.max_ratio <= 6.0);
  for (const auto& row : report.rows) CHECK(row.sup_count >= row.inf_count);
  CHECK(report.rho_values.size() == report.ratio_by_rho.size());
  for (std::size_t i = 0; i + 1 < report.rho_values.size(); ++i) {
    CHECK(report.rho_values[i] > report.rho_values[i + 1]);
    CHECK(report.running_max[i] <= report.running_max[i + 1]);
  }
}

TEST_CASE("unit interval is bounded with ratio at most 2") {
  std::vector<Scalar> deltas{q(1, 4), q(1, 8)};
  auto report = equihom_certify(IntervalSet::unit(), deltas, powers(q(1, 2), 1, 8));
  CHECK(report.verdict == Verdict::Bounded);
  CHECK(report.max_ratio <= 2.0);
}

TEST_CASE("halving-sequence set grows") {
  auto f = prop38_set(20);
  std::vector<Scalar> deltas{q(1, 4)};
  auto ratio_grid = powers(q(1, 2), 2, 10);  // ρ = 2^-4 .. 2^-12
  auto report = equihom_certify(f, deltas, ratio_grid);
  CHECK(report.verdict == Verdict::Growing);
  CHECK(report.growth_fit > kGrowingFitThreshold);
  for (const auto& row : report.rows) {
    CHECK(row.inf_count == 1);
    CHECK(row.ratio >= std::log2(1.0 / to_double(row.rho)) - 2);
  }
}

TEST_CASE("scale constants") {
  auto f = third_prefractal(8);
  std::vector<Scalar> deltas{q(1, 9)};
  auto ratios = powers(q(1, 3), 1, 4);
  auto plain = equihom_certify(f, deltas, ratios);
  auto wide = equihom_certify(f, deltas, ratios, q(3), q(1, 3));
  CHECK(wide.c1 == 3);
  CHECK(wide.c2 == q(1, 3));
  // larger windows at finer scales only raise the infimum side
  CHECK(wide.max_ratio <= plain.max_ratio);
  CHECK(code_of([&] { equihom_certify(f, deltas, ratios, q(1, 2), q(1)); }) ==
        ErrorCode::ScaleOrderViolation);
  CHECK(code_of([&] { equihom_certify(f, deltas, ratios, q(1), q(2)); }) ==
        ErrorCode::ScaleOrderViolation);
}

TEST_CASE("gencant systems with constant per-level ratios are bounded") {
  for (const auto& spec : {prop37_spec(12), CantorSpec::explicit_ratios({q(1, 4), q(2, 5)}, 12)}) {
    auto f = cantor_prefractal(spec, 0, 12);
    std::vector<Scalar> deltas{pi_product(spec, 0, 2).value};
    std::vector<Scalar> ratios;
    for (std::size_t n = 1; n <= 6; ++n) ratios.push_back(pi_product(spec, 2, n).value);
    auto report = equihom_certify(f, deltas, ratios);
    CHECK(report.verdict == Verdict::Bounded);
    CHECK(report.max_ratio <= 6.0);
  }
}

TEST_CASE("single-point Assouad estimates") {
  auto f = third_prefractal(10);
  std::vector<Scalar> d{q(1, 9)};
  auto at_zero = equihom_singlepoint_assouad(f, q(0), d, powers(q(1, 3), 2, 6));
  CHECK(std::abs(at_zero.dimension - kLog23) <= 0.03);
  auto profile = assouad_estimate(local_cover_profile(f, d, powers(q(1, 3), 2, 6)));
  CHECK(std::abs(at_zero.dimension - profile.dimension) <= 0.05);

  std::vector<Scalar> ud{q(1, 4)};
  auto unit = equihom_singlepoint_assouad(IntervalSet::unit(), q(1, 2), ud, powers(q(1, 2), 1, 10));
  CHECK(std::abs(unit.dimension - 1.0) <= 0.03);

  CHECK(code_of([&] { equihom_singlepoint_assouad(f, q(1, 2), d, powers(q(1, 3), 2, 6)); }) ==
        ErrorCode::CenterNotInSet);

  // critical pairs on the dyadic-block prefractal
  auto spec = prop37_spec(40);
  auto p37 = cantor_prefractal(spec, 0, 16);
  std::vector<ScalePair> pairs;
  for (std::size_t n = 1; n <= 2; ++n) {
    pairs.push_back({pi_product(spec, 0, std::size_t{1} << (2 * (n - 1))).value,
                     pi_product(spec, 0, std::size_t{1} << (2 * n - 1)).value});
  }
  auto crit = equihom_singlepoint_assouad(p37, q(0), pairs);
  CHECK(crit.dimension >= 0.60);
}

TEST_CASE("Ahlfors regularity") {
  auto third = middle_third();
  auto cert = unit_certificate(third);
  REQUIRE(cert.passed());
  auto report = ahlfors_regularity_check(third, cert, kLog23, 8);
  CHECK(report.c_observed >= 1.0);
  CHECK(report.c_observed <= 4.0);
  for (const auto& s : report.samples) {
    CHECK(s.inner_measure <= s.outer_measure);
    CHECK(s.ratio_high <= report.c_observed + 1e-12);
    if (s.inner_measure > 0) CHECK(s.ratio_low >= 1.0 / report.c_observed - 1e-12);
  }

  auto six = ahlfors_regularity_check(third, cert, kLog23, 6);
  auto ten = ahlfors_regularity_check(third, cert, kLog23, 10);
  CHECK(std::abs(ten.c_observed - six.c_observed) <= 0.2 * six.c_observed);

  auto line = ahlfors_regularity_check(halves(), unit_certificate(halves()), 1.0, 8);
  CHECK(line.c_observed <= 2.0 + 1e-9);

  CHECK(code_of([&] { ahlfors_regularity_check(third, cert, 0.5, 6); }) == ErrorCode::ExponentMismatch);
  auto finite = cantor_to_ifs(prop37_spec(10));
  CHECK(code_of([&] { ahlfors_regularity_check(finite, unit_certificate(finite), kLog23, 6); }) ==
        ErrorCode::NotAutonomous);
  IndexedSystem overlap({{Similarity1D(q(1, 2), q(0)), Similarity1D(q(1, 2), q(1, 4))}}, true);
  auto bad = unit_certificate(overlap);
  CHECK(code_of([&] { ahlfors_regularity_check(overlap, bad, 1.0, 6); }) == ErrorCode::InvariantViolation);
}
