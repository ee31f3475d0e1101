#pragma once

// JSON forms of specs, systems, sets and open sets. Rationals are always
// strings "p/q" so nothing is lost on a round trip.

#include <string>
#include <vector>

#include "json.hpp"

#include "fracdim/cantor.hpp"
#include "fracdim/ifs.hpp"
#include "fracdim/sets.hpp"

namespace fracdim::io {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws IoError / ParseError.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Scalar scalar_from_json(const json& j);
json to_json(const Scalar& value);

/// {"kind": "constant" | "blocks-prop37" | "explicit", "ratios": [...], "horizon": N}
CantorSpec cantor_spec_from_json(const json& j);
json to_json(const CantorSpec& spec);

/// {"cyclic": bool, "levels": [[{"ratio", "offset", "orientation"}, ...], ...]}
IndexedSystem system_from_json(const json& j);
json to_json(const IndexedSystem& sys);

enum class SetKind { Points, Intervals, CantorPrefractal, InversePowers, Geometric };

/// Declarative description of a set, kept so reports can echo their input.
///   points:            {"kind": "points", "points": [...]}
///   intervals:         {"kind": "intervals", "intervals": [["lo", "hi"], ...]}
///   cantor-prefractal: {"kind": "cantor-prefractal", "spec": {...}, "shift": k, "depth": n}
///   inverse-powers:    {"kind": "inverse-powers", "alpha": "1", "n_max": N}  ({0} ∪ {n^-α})
///   geometric:         {"kind": "geometric", "ratio": "1/2", "n_max": N}     ({0} ∪ {r^n, 0 <= n <= N})
struct SetSpec {
  SetKind kind = SetKind::Points;
  std::vector<Scalar> points;
  std::vector<Interval> intervals;
  std::vector<CantorSpec> cantor;  // zero or one entry
  std::size_t shift = 0;
  std::size_t depth = 0;
  Scalar alpha = 1;
  Scalar ratio = 0;
  std::size_t n_max = 0;

  friend bool operator==(const SetSpec&, const SetSpec&) = default;
};

SetSpec set_spec_from_json(const json& j);
json to_json(const SetSpec& spec);

struct MaterializedSet {
  IntervalSet set;
  /// Where exact arithmetic was replaced by dyadic rounding.
  std::vector<std::string> approximations;
};

/// Builds the set. Prefractal depth is capped at 24 (TooLarge).
MaterializedSet materialize(const SetSpec& spec);

/// {"open_intervals": [["0", "1"], ...]} for one set shared by all levels, or
/// {"levels": [{"open_intervals": ...}, ...]} for one set per level.
std::vector<OpenSet> open_sets_from_json(const json& j);
json to_json(const std::vector<OpenSet>& sets);

/// "p/q", a comma list "1/3,1/9", or a power range "3^-2..3^-10".
std::vector<Scalar> parse_grid(const std::string& text);

std::string_view to_string(SetKind kind) noexcept;

}  // namespace fracdim::io
