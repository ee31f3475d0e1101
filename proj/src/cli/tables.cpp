#include "fracdim/tables.hpp"

#include <cmath>
#include <cstdio>

#include "fracdim/error.hpp"
#include "fracdim/json_io.hpp"

namespace fracdim::io {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_rows(bool empty) {
  if (empty) throw Error(ErrorCode::EmptySet, "no rows to write");
}

std::string row(const Scalar& delta, const Scalar& rho, std::size_t sup, std::size_t inf) {
  return format_scalar(delta) + "," + format_scalar(rho) + "," + std::to_string(sup) + "," +
         std::to_string(inf) + "," + num(static_cast<double>(sup) / static_cast<double>(inf)) + "\n";
}

}  // namespace

std::string loglog_table(std::span<const BoxCount> counts) {
  require_rows(counts.empty());
  std::string out = "delta,count,log10_inv_delta,log10_count\n";
  for (const auto& c : counts) {
    out += format_scalar(c.delta) + "," + std::to_string(c.count) + "," +
           num(-log_of(c.delta) / std::log(10.0)) + "," +
           num(std::log10(static_cast<double>(c.count))) + "\n";
  }
  return out;
}

std::string profile_table(const LocalCoverProfile& profile) {
  require_rows(profile.rows.empty());
  std::string out = "delta,rho,sup_count,inf_count,ratio\n";
  for (const auto& r : profile.rows) out += row(r.delta, r.rho, r.sup_count, r.inf_count);
  return out;
}

std::string profile_table(const EquihomReport& report) {
  require_rows(report.rows.empty());
  std::string out = "delta,rho,sup_count,inf_count,ratio\n";
  for (const auto& r : report.rows) out += row(r.delta, r.rho, r.sup_count, r.inf_count);
  return out;
}

void emit_loglog_table(std::span<const BoxCount> counts, const std::string& path) {
  write_text_file(path, loglog_table(counts));
}

void emit_loglog_table(const LocalCoverProfile& profile, const std::string& path) {
  write_text_file(path, profile_table(profile));
}

void emit_loglog_table(const EquihomReport& report, const std::string& path) {
  write_text_file(path, profile_table(report));
}

}  // namespace fracdim::io
