#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fracdim::cli {

enum class Command { Cantor, IfsRun, Dims, Assouad, Equihom, Verify };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command) noexcept;

struct RunConfig {
  Command command = Command::Cantor;
  std::string input;        // cantor spec, set, or system file
  std::string open_set;     // verify only
  std::string seed_set;     // ifs-run: optional seed set file
  std::size_t shift = 0;
  std::size_t depth = 12;   // prefractal depth, or pullback steps for ifs-run
  std::string delta_grid;   // empty: command default
  std::string rho_grid;     // absolute ρ values
  std::string ratio_grid;   // ρ/δ values
  std::string center;       // assouad: single-point estimate at this x
  std::string epsilon0 = "1";
  std::string c1 = "1";
  std::string c2 = "1";
  std::optional<double> exponent;  // dims: attainment; verify: hippo check
  std::size_t levels = 0;   // verify: levels to check (0 = default)
  std::string report;       // JSON report path; stdout when empty
  std::string table;        // CSV path
  std::uint64_t seed = 0;   // recorded in the report; no command draws random numbers yet
};

inline constexpr std::size_t kMaxDepth = 24;

/// 0 on success, 1 on input or validation errors (including a failing Moran
/// certificate), 2 on an internal invariant violation. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fracdim::cli
