#include "fracdim/cli.hpp"

#include <cmath>
#include <iostream>

#include "fracdim/cantor.hpp"
#include "fracdim/covers.hpp"
#include "fracdim/dims.hpp"
#include "fracdim/equihom.hpp"
#include "fracdim/error.hpp"
#include "fracdim/hausdorff.hpp"
#include "fracdim/json_io.hpp"
#include "fracdim/tables.hpp"

namespace fracdim::cli {

namespace {

using io::json;

constexpr std::size_t kMaxListedIntervals = 4096;

std::string grid_or(const std::string& text, const char* fallback) { return text.empty() ? fallback : text; }

json doubles(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

json interval_list(const IntervalSet& f) {
  json out = json::array();
  for (const auto& p : f.intervals()) out.push_back(json::array({io::to_json(p.lo), io::to_json(p.hi)}));
  return out;
}

json set_summary(const IntervalSet& f) {
  json out{{"pieces", f.size()}, {"min", io::to_json(f.min())}, {"max", io::to_json(f.max())},
           {"length", io::to_json(f.length())}};
  if (f.size() <= kMaxListedIntervals) out["intervals"] = interval_list(f);
  return out;
}

json box_count_list(const std::vector<BoxCount>& counts) {
  json out = json::array();
  for (const auto& c : counts) out.push_back({{"delta", io::to_json(c.delta)}, {"count", c.count}});
  return out;
}

json assouad_json(const AssouadEstimate& a) {
  return {{"dimension", a.dimension}, {"constant", a.constant}, {"log_ratios", doubles(a.log_ratios)},
          {"log_counts", doubles(a.log_counts)}, {"slopes", doubles(a.slopes)}, {"tail_from", a.tail_from}};
}

json profile_rows(const LocalCoverProfile& p) {
  json out = json::array();
  for (const auto& r : p.rows) {
    out.push_back({{"delta", io::to_json(r.delta)}, {"rho", io::to_json(r.rho)}, {"sup_count", r.sup_count},
                   {"inf_count", r.inf_count}, {"argmax_center", io::to_json(r.argmax_center)},
                   {"argmin_center", io::to_json(r.argmin_center)}});
  }
  return out;
}

io::MaterializedSet load_set(const RunConfig& c, json& report) {
  if (c.input.empty()) throw Error(ErrorCode::ParseError, "--set is required");
  io::SetSpec spec = io::set_spec_from_json(io::read_json_file(c.input));
  if (spec.kind == io::SetKind::CantorPrefractal && spec.depth > kMaxDepth) {
    throw Error(ErrorCode::TooLarge, "prefractal depth above 24");
  }
  io::MaterializedSet m = io::materialize(spec);
  report["set"] = io::to_json(spec);
  report["approximations"] = m.approximations;
  return m;
}

void emit(const RunConfig& c, const json& report, std::ostream& out) {
  std::string text = report.dump(2) + "\n";
  if (c.report.empty()) {
    out << text;
  } else {
    io::write_text_file(c.report, text);
  }
}

int run_cantor(const RunConfig& c, json& report) {
  if (c.input.empty()) throw Error(ErrorCode::ParseError, "--spec is required");
  CantorSpec spec = io::cantor_spec_from_json(io::read_json_file(c.input));
  if (c.depth > kMaxDepth) throw Error(ErrorCode::TooLarge, "prefractal depth above 24");
  if (c.shift >= spec.horizon()) throw Error(ErrorCode::HorizonExceeded, "shift reaches the horizon");
  report["spec"] = io::to_json(spec);
  report["shift"] = c.shift;
  report["depth"] = c.depth;

  IntervalSet f = cantor_prefractal(spec, c.shift, c.depth);
  report["prefractal"] = set_summary(f);
  report["piece_length"] = io::to_json(pi_product(spec, c.shift, c.depth).value);

  auto seq = cantor_box_sequence(spec, c.shift, spec.horizon() - c.shift);
  json s = json::array();
  std::vector<double> values;
  for (const auto& p : seq) {
    s.push_back({{"n", p.n}, {"s", p.s}});
    values.push_back(p.s);
  }
  std::size_t from = tail_start(values.size());
  report["box_sequence"] = s;
  report["tail_from_n"] = from + 1;
  report["upper_estimate"] = *std::max_element(values.begin() + from, values.end());
  report["lower_estimate"] = *std::min_element(values.begin() + from, values.end());

  std::vector<Scalar> scales;
  for (std::size_t j = 1; j <= c.depth; ++j) scales.push_back(pi_product(spec, c.shift, j).value);
  if (!c.delta_grid.empty()) scales = io::parse_grid(c.delta_grid);
  auto counts = box_counts(f, scales);
  report["box_counts"] = box_count_list(counts);
  if (!c.table.empty()) io::emit_loglog_table(counts, c.table);
  return 0;
}

int run_ifs(const RunConfig& c, json& report) {
  if (c.input.empty()) throw Error(ErrorCode::ParseError, "--system is required");
  IndexedSystem sys = io::system_from_json(io::read_json_file(c.input));
  report["system"] = io::to_json(sys);
  Scalar r = attractor_seed_radius(sys);
  IntervalSet seed({{-r, r}});
  if (!c.seed_set.empty()) {
    io::SetSpec s = io::set_spec_from_json(io::read_json_file(c.seed_set));
    seed = io::materialize(s).set;
    report["seed_set"] = io::to_json(s);
  }
  if (c.depth == 0) throw Error(ErrorCode::ParseError, "--depth must be at least 1");
  auto trace = pullback_approximation(sys, c.shift, c.depth, seed);
  report["seed_radius"] = io::to_json(r);
  report["sigma_star_upper"] = io::to_json(sys.sigma_star_upper());
  report["shift"] = c.shift;
  report["steps"] = c.depth;
  json decay = json::array();
  for (std::size_t j = 0; j < trace.decay.size(); ++j) {
    decay.push_back({{"j", j}, {"distance", io::to_json(trace.decay[j])}, {"bound", io::to_json(trace.bounds[j])}});
  }
  report["decay"] = decay;
  // ρ_H(K_m, F^k) <= Σ_{j >= m} d_j <= (σ*)^m · 2R / (1 − σ*)
  Scalar sigma = sys.sigma_star_upper();
  report["tail_bound"] = io::to_json(pow_int(sigma, static_cast<long>(c.depth)) * 2 * r / (1 - sigma));
  report["approximation"] = set_summary(trace.set);
  return 0;
}

int run_dims(const RunConfig& c, json& report) {
  auto m = load_set(c, report);
  auto scales = io::parse_grid(grid_or(c.delta_grid, "2^-1..2^-12"));
  for (const auto& d : scales) {
    if (!verify_cover_packing_sandwich(m.set, d)) {
      throw Error(ErrorCode::InvariantViolation, "cover/packing sandwich fails at delta " + format_scalar(d));
    }
  }
  auto counts = box_counts(m.set, scales);
  report["box_counts"] = box_count_list(counts);
  report["sandwich_checked"] = true;
  if (counts.size() >= 4) {
    auto est = box_dimension_estimate(counts);
    report["lower_box"] = est.lower;
    report["upper_box"] = est.upper;
    report["slopes"] = doubles(est.slopes);
    report["tail_from"] = est.tail_from;
  }
  if (c.exponent) {
    auto a = attainment_check(counts, *c.exponent);
    report["attainment"] = {{"dimension", *c.exponent}, {"c_low", a.c_low}, {"c_high", a.c_high}};
  }
  if (!c.table.empty()) io::emit_loglog_table(counts, c.table);
  return 0;
}

int run_assouad(const RunConfig& c, json& report) {
  auto m = load_set(c, report);
  auto deltas = io::parse_grid(grid_or(c.delta_grid, "2^-2..2^-4"));
  auto ratios = io::parse_grid(grid_or(c.ratio_grid, "2^-1..2^-8"));
  auto profile = local_cover_profile(m.set, deltas, ratios);
  report["center_family"] = profile.center_family;
  report["profile"] = profile_rows(profile);
  report["assouad"] = assouad_json(assouad_estimate(profile));
  report["lower_assouad"] = assouad_json(lower_assouad_estimate(profile));
  if (!c.center.empty()) {
    Scalar x = parse_scalar(c.center);
    report["single_point"] = assouad_json(equihom_singlepoint_assouad(m.set, x, deltas, ratios));
    report["single_point"]["center"] = io::to_json(x);
  }
  if (!c.table.empty()) io::emit_loglog_table(profile, c.table);
  return 0;
}

int run_equihom(const RunConfig& c, json& report) {
  auto m = load_set(c, report);
  auto deltas = io::parse_grid(grid_or(c.delta_grid, "1/4"));
  Scalar c1 = parse_scalar(c.c1), c2 = parse_scalar(c.c2);
  EquihomReport eq;
  if (!c.rho_grid.empty()) {
    std::vector<ScalePair> pairs;
    for (const auto& d : deltas) {
      for (const auto& rho : io::parse_grid(c.rho_grid)) {
        if (rho < d) pairs.push_back({d, rho});
      }
    }
    if (pairs.empty()) throw Error(ErrorCode::ScaleOrderViolation, "no rho below any delta");
    eq = equihom_certify(m.set, pairs, c1, c2);
  } else {
    auto ratios = io::parse_grid(grid_or(c.ratio_grid, "2^-1..2^-8"));
    eq = equihom_certify(m.set, deltas, ratios, c1, c2);
  }
  json rows = json::array();
  for (const auto& r : eq.rows) {
    rows.push_back({{"delta", io::to_json(r.delta)}, {"rho", io::to_json(r.rho)}, {"sup_count", r.sup_count},
                    {"inf_count", r.inf_count}, {"ratio", r.ratio},
                    {"argmax_center", io::to_json(r.argmax_center)},
                    {"argmin_center", io::to_json(r.argmin_center)}});
  }
  report["c1"] = io::to_json(eq.c1);
  report["c2"] = io::to_json(eq.c2);
  report["center_family"] = eq.center_family;
  report["rows"] = rows;
  report["max_ratio"] = eq.max_ratio;
  report["growth_fit"] = eq.growth_fit;
  report["verdict"] = std::string(to_string(eq.verdict));
  if (!c.table.empty()) io::emit_loglog_table(eq, c.table);
  return 0;
}

int run_verify(const RunConfig& c, json& report) {
  if (c.input.empty()) throw Error(ErrorCode::ParseError, "--system is required");
  if (c.open_set.empty()) throw Error(ErrorCode::ParseError, "--open-set is required");
  IndexedSystem sys = io::system_from_json(io::read_json_file(c.input));
  auto open_sets = io::open_sets_from_json(io::read_json_file(c.open_set));
  Scalar eps = parse_scalar(c.epsilon0);
  auto cert = verify_mosc(sys, open_sets, eps, c.levels);

  report["system"] = io::to_json(sys);
  report["open_sets"] = io::to_json(open_sets);
  json checks = json::array();
  for (const auto& k : cert.checks) {
    json row{{"level", k.level}, {"nested", k.nested}, {"disjoint", k.disjoint}, {"large", k.large},
             {"measure", io::to_json(k.measure)}};
    if (k.overlap_witness) row["overlap_witness"] = json::array({io::to_json(k.overlap_witness->lo), io::to_json(k.overlap_witness->hi)});
    if (k.escape_witness) row["escape_witness"] = json::array({io::to_json(k.escape_witness->lo), io::to_json(k.escape_witness->hi)});
    checks.push_back(std::move(row));
  }
  report["certificate"] = {{"passed", cert.passed()}, {"epsilon0", io::to_json(cert.epsilon0)},
                           {"eta", io::to_json(cert.eta)}, {"disjointness_reading", cert.disjointness_reading},
                           {"checks", checks}};

  std::vector<Scalar> level1;
  for (const auto& f : sys.level(1)) level1.push_back(f.ratio);
  double s = c.exponent ? *c.exponent : moran_exponent(level1);
  report["exponent"] = s;
  std::size_t horizon = sys.cyclic() ? sys.stored_levels() : sys.horizon();
  auto hippo = hippo_check(sys, s, horizon);
  report["hippo"] = {{"passed", hippo.passed}, {"residuals", doubles(hippo.residuals)}};
  return cert.passed() ? 0 : 1;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::Cantor, Command::IfsRun, Command::Dims, Command::Assouad, Command::Equihom,
                    Command::Verify}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command command) noexcept {
  switch (command) {
    case Command::Cantor: return "cantor";
    case Command::IfsRun: return "ifs-run";
    case Command::Dims: return "dims";
    case Command::Assouad: return "assouad";
    case Command::Equihom: return "equihom";
    case Command::Verify: return "verify";
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json report;
  report["command"] = std::string(to_string(config.command));
  report["seed"] = config.seed;
  try {
    int code = 0;
    switch (config.command) {
      case Command::Cantor: code = run_cantor(config, report); break;
      case Command::IfsRun: code = run_ifs(config, report); break;
      case Command::Dims: code = run_dims(config, report); break;
      case Command::Assouad: code = run_assouad(config, report); break;
      case Command::Equihom: code = run_equihom(config, report); break;
      case Command::Verify: code = run_verify(config, report); break;
    }
    emit(config, report, out);
    if (code != 0) err << "fracdim: " << to_string(config.command) << " check failed\n";
    return code;
  } catch (const Error& e) {
    err << "fracdim: " << e.what() << "\n";
    return e.code() == ErrorCode::InvariantViolation ? 2 : 1;
  } catch (const std::exception& e) {
    err << "fracdim: internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fracdim::cli
