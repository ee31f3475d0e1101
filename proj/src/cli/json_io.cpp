#include "fracdim/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fracdim/error.hpp"

namespace fracdim::io {

namespace {

constexpr std::size_t kMaxDepth = 24;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_from_json(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned()) bad(std::string("\"") + name + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Interval> intervals_from_json(const json& j) {
  if (!j.is_array()) bad("interval list must be an array");
  std::vector<Interval> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) bad("each interval is a [lo, hi] pair");
    out.emplace_back(scalar_from_json(pair[0]), scalar_from_json(pair[1]));
  }
  return out;
}

json intervals_to_json(std::span<const Interval> pieces) {
  json out = json::array();
  for (const auto& p : pieces) out.push_back(json::array({to_json(p.lo), to_json(p.hi)}));
  return out;
}

std::vector<Scalar> scalars_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Scalar> out;
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

json scalars_to_json(std::span<const Scalar> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("rationals are written as strings \"p/q\" or integers");
}

json to_json(const Scalar& value) { return format_scalar(value); }

CantorSpec cantor_spec_from_json(const json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  std::size_t horizon = count_from_json(j, "horizon");
  if (horizon == 0) bad("horizon must be at least 1");
  if (kind == "blocks-prop37") return prop37_spec(horizon);
  std::vector<Scalar> ratios = scalars_from_json(field(j, "ratios"));
  if (ratios.empty()) throw Error(ErrorCode::EmptyRatios, "cantor spec lists no ratios");
  if (kind == "constant") {
    if (ratios.size() != 1) bad("a constant spec has exactly one ratio");
    return CantorSpec::constant(ratios.front(), horizon);
  }
  if (kind == "explicit") return CantorSpec::explicit_ratios(std::move(ratios), horizon);
  bad("unknown cantor kind \"" + kind + "\"");
}

json to_json(const CantorSpec& spec) {
  json out;
  switch (spec.kind()) {
    case CantorKind::Constant: out["kind"] = "constant"; break;
    case CantorKind::BlocksProp37: out["kind"] = "blocks-prop37"; break;
    case CantorKind::Explicit: out["kind"] = "explicit"; break;
  }
  out["ratios"] = scalars_to_json(spec.listed_ratios());
  out["horizon"] = spec.horizon();
  return out;
}

IndexedSystem system_from_json(const json& j) {
  bool cyclic = field(j, "cyclic").get<bool>();
  const json& levels = field(j, "levels");
  if (!levels.is_array()) bad("\"levels\" must be an array");
  std::vector<std::vector<Similarity1D>> out;
  for (const auto& level : levels) {
    if (!level.is_array()) bad("each level is an array of maps");
    std::vector<Similarity1D> maps;
    for (const auto& m : level) {
      int orientation = m.contains("orientation") ? m.at("orientation").get<int>() : 1;
      maps.emplace_back(scalar_from_json(field(m, "ratio")), scalar_from_json(field(m, "offset")),
                        orientation);
    }
    out.push_back(std::move(maps));
  }
  return IndexedSystem(std::move(out), cyclic);
}

json to_json(const IndexedSystem& sys) {
  json levels = json::array();
  for (const auto& level : sys.levels()) {
    json maps = json::array();
    for (const auto& f : level) {
      maps.push_back({{"ratio", to_json(f.ratio)}, {"offset", to_json(f.offset)},
                      {"orientation", f.orientation}});
    }
    levels.push_back(std::move(maps));
  }
  return {{"cyclic", sys.cyclic()}, {"levels", std::move(levels)}};
}

std::string_view to_string(SetKind kind) noexcept {
  switch (kind) {
    case SetKind::Points: return "points";
    case SetKind::Intervals: return "intervals";
    case SetKind::CantorPrefractal: return "cantor-prefractal";
    case SetKind::InversePowers: return "inverse-powers";
    case SetKind::Geometric: return "geometric";
  }
  return "?";
}

SetSpec set_spec_from_json(const json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  SetSpec s;
  if (kind == "points") {
    s.kind = SetKind::Points;
    s.points = scalars_from_json(field(j, "points"));
    if (s.points.empty()) throw Error(ErrorCode::EmptySet, "point list is empty");
  } else if (kind == "intervals") {
    s.kind = SetKind::Intervals;
    s.intervals = intervals_from_json(field(j, "intervals"));
    if (s.intervals.empty()) throw Error(ErrorCode::EmptySet, "interval list is empty");
  } else if (kind == "cantor-prefractal") {
    s.kind = SetKind::CantorPrefractal;
    s.cantor.push_back(cantor_spec_from_json(field(j, "spec")));
    s.shift = j.contains("shift") ? count_from_json(j, "shift") : 0;
    s.depth = count_from_json(j, "depth");
  } else if (kind == "inverse-powers") {
    s.kind = SetKind::InversePowers;
    s.alpha = scalar_from_json(field(j, "alpha"));
    if (s.alpha <= 0) throw Error(ErrorCode::NonPositiveScale, "alpha must be positive");
    s.n_max = count_from_json(j, "n_max");
  } else if (kind == "geometric") {
    s.kind = SetKind::Geometric;
    s.ratio = scalar_from_json(field(j, "ratio"));
    if (s.ratio <= 0 || s.ratio >= 1) throw Error(ErrorCode::RatioOutOfRange, "ratio must lie in (0,1)");
    s.n_max = count_from_json(j, "n_max");
  } else {
    bad("unknown set kind \"" + kind + "\"");
  }
  return s;
}

json to_json(const SetSpec& s) {
  json out;
  out["kind"] = std::string(to_string(s.kind));
  switch (s.kind) {
    case SetKind::Points: out["points"] = scalars_to_json(s.points); break;
    case SetKind::Intervals: out["intervals"] = intervals_to_json(s.intervals); break;
    case SetKind::CantorPrefractal:
      out["spec"] = to_json(s.cantor.front());
      out["shift"] = s.shift;
      out["depth"] = s.depth;
      break;
    case SetKind::InversePowers:
      out["alpha"] = to_json(s.alpha);
      out["n_max"] = s.n_max;
      break;
    case SetKind::Geometric:
      out["ratio"] = to_json(s.ratio);
      out["n_max"] = s.n_max;
      break;
  }
  return out;
}

MaterializedSet materialize(const SetSpec& s) {
  MaterializedSet out;
  switch (s.kind) {
    case SetKind::Points: out.set = PointSet(s.points).to_interval_set(); break;
    case SetKind::Intervals: out.set = IntervalSet(s.intervals); break;
    case SetKind::CantorPrefractal:
      if (s.depth > kMaxDepth) {
        throw Error(ErrorCode::TooLarge, "prefractal depth " + std::to_string(s.depth) + " exceeds 24");
      }
      out.set = cantor_prefractal(s.cantor.front(), s.shift, s.depth);
      break;
    case SetKind::InversePowers: {
      std::vector<Scalar> pts{Scalar(0)};
      bool integral = s.alpha.get_den() == 1;
      for (std::size_t n = 1; n <= s.n_max; ++n) pts.push_back(inverse_power(n, to_double(s.alpha)));
      if (!integral) {
        out.approximations.push_back("n^-" + format_scalar(s.alpha) + " rounded to the nearest multiple of 2^-" +
                                     std::to_string(kDefaultRoundingBits));
      }
      out.set = PointSet(std::move(pts)).to_interval_set();
      break;
    }
    case SetKind::Geometric: {
      std::vector<Scalar> pts{Scalar(0)};
      Scalar p = 1;
      for (std::size_t n = 0; n <= s.n_max; ++n, p *= s.ratio) pts.push_back(p);
      out.set = PointSet(std::move(pts)).to_interval_set();
      break;
    }
  }
  return out;
}

std::vector<OpenSet> open_sets_from_json(const json& j) {
  if (j.contains("levels")) {
    std::vector<OpenSet> out;
    for (const auto& level : field(j, "levels")) out.emplace_back(intervals_from_json(field(level, "open_intervals")));
    if (out.empty()) throw Error(ErrorCode::EmptySet, "no open sets given");
    return out;
  }
  OpenSet single(intervals_from_json(field(j, "open_intervals")));
  if (single.empty()) throw Error(ErrorCode::EmptySet, "open set has no components");
  return {single};
}

json to_json(const std::vector<OpenSet>& sets) {
  if (sets.size() == 1) return {{"open_intervals", intervals_to_json(sets.front().components())}};
  json levels = json::array();
  for (const auto& u : sets) levels.push_back({{"open_intervals", intervals_to_json(u.components())}});
  return {{"levels", std::move(levels)}};
}

std::vector<Scalar> parse_grid(const std::string& text) {
  std::vector<Scalar> out;
  auto range = text.find("..");
  if (range != std::string::npos) {
    // b^-i..b^-j
    auto parse_power = [&](const std::string& part, Scalar& base) {
      auto caret = part.find('^');
      if (caret == std::string::npos) bad("grid range \"" + text + "\" must look like 3^-2..3^-10");
      base = parse_scalar(part.substr(0, caret));
      try {
        std::size_t used = 0;
        long e = std::stol(part.substr(caret + 1), &used);
        if (used != part.size() - caret - 1) bad("bad exponent in \"" + part + "\"");
        return e;
      } catch (const std::logic_error&) {
        bad("bad exponent in \"" + part + "\"");
      }
    };
    Scalar b1, b2;
    long e1 = parse_power(text.substr(0, range), b1);
    long e2 = parse_power(text.substr(range + 2), b2);
    if (b1 != b2 || b1 <= 0) bad("grid range \"" + text + "\" needs one positive base");
    long step = e2 >= e1 ? 1 : -1;
    for (long e = e1;; e += step) {
      out.push_back(pow_int(b1, e));
      if (e == e2) break;
    }
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) out.push_back(parse_scalar(item));
    }
  }
  if (out.empty()) bad("empty grid \"" + text + "\"");
  for (const auto& v : out) {
    if (v <= 0) throw Error(ErrorCode::NonPositiveScale, "grid value " + format_scalar(v) + " is not positive");
  }
  return out;
}

}  // namespace fracdim::io
