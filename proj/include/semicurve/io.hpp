#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "semicurve/curve.hpp"
#include "semicurve/numset.hpp"
#include "semicurve/verify.hpp"

namespace semicurve::io {

using Json = nlohmann::ordered_json;

/// Bumped whenever a CSV column is added, dropped or moved.
inline constexpr int kCsvVersion = 1;

// Semigroups: {"generators": [...]} or {"gaps": [...]}.
Json to_json(const NumericalSemigroup& s);
NumericalSemigroup semigroup_from_json(const Json& j);

Json to_json(const WeightReport& r);
/// "# semicurve weight-report csv v1" then the column names.
std::string weight_csv_header();
std::string weight_csv_row(const WeightReport& r);

Json to_json(const verify::ScanReport& r, bool with_time = false);
std::string to_csv(const verify::ScanReport& r);

/// Curve files hold {"f": [[c0, c1, ...], ...]} as JSON, or the TOML line
/// f = [[...], ...]. Coefficients are integers or "p/q" strings.
CurveParametrization curve_from_json(const Json& j);
CurveParametrization curve_from_toml(std::string_view text);
/// Picks the format from the extension (.toml), otherwise JSON.
CurveParametrization read_curve_file(const std::filesystem::path& path);

Json to_json(const Poly& p);
Json to_json(const Pencil& p);
Json to_json(const GonalityBounds& b);
Json to_json(const HyperellipticAnswer& a);
Json to_json(const ScrollWitness& w);
Json to_json(const LinearSeriesReport& r);

struct AnalysisOptions {
  std::uint64_t seed = 1;
};

/// Semigroup, weights, classification, pencil witnesses, scroll data.
Json analyze(const Curve& c, const AnalysisOptions& opt = {});

}  // namespace semicurve::io
