#pragma once

// CSV tables for log-log plots. Exact rationals are written as "p/q" strings,
// logs as base-10 floats.

#include <span>
#include <string>

#include "fracdim/dims.hpp"
#include "fracdim/equihom.hpp"

namespace fracdim::io {

/// delta,count,log10_inv_delta,log10_count
std::string loglog_table(std::span<const BoxCount> counts);
/// delta,rho,sup_count,inf_count,ratio
std::string profile_table(const LocalCoverProfile& profile);
std::string profile_table(const EquihomReport& report);

/// Write the table; empty data throws EmptySet before any file is created.
void emit_loglog_table(std::span<const BoxCount> counts, const std::string& path);
void emit_loglog_table(const LocalCoverProfile& profile, const std::string& path);
void emit_loglog_table(const EquihomReport& report, const std::string& path);

}  // namespace fracdim::io
