// JSON and CSV encodings of the library's value types. Rationals are always
// written as "p/q" strings; no field depends on wall-clock time, so equal
// inputs give byte-identical output.

#pragma once

#include <string>

#include <json.hpp>

#include "pinlab/adversary.hpp"
#include "pinlab/fractal.hpp"

namespace pinlab {

using json = nlohmann::ordered_json;

/// Reads a "p/q" string or a JSON integer; throws std::invalid_argument otherwise.
[[nodiscard]] Rational rational_from_json(const json& j);

[[nodiscard]] json to_json(const ComplexityProfile& p);
/// {"horizon": r, "slope_cap": c, "increments": [...]}; slope_cap defaults to 2.
[[nodiscard]] ComplexityProfile profile_from_json(const json& j);

[[nodiscard]] json to_json(const ColorSet& c);
[[nodiscard]] json to_json(const Partition& p);
[[nodiscard]] json to_json(const RgbPartition& p);
[[nodiscard]] json to_json(const BoundReport& r);

[[nodiscard]] std::string bound_csv_header();
[[nodiscard]] std::string bound_csv_row(const BoundReport& r);

[[nodiscard]] json to_json(const Witness& w);
[[nodiscard]] json to_json(const SearchSpec& s);
[[nodiscard]] json to_json(const SearchReport& r);
[[nodiscard]] json to_json(const StructureReport& r);
[[nodiscard]] json to_json(const GeometryCheckReport& r);

[[nodiscard]] ExperimentConfig experiment_from_json(const json& j);
[[nodiscard]] json to_json(const ExperimentConfig& c);
[[nodiscard]] json to_json(const ExperimentReport& r);
[[nodiscard]] std::string pins_csv(const ExperimentReport& r);

[[nodiscard]] const char* constraint_name(Constraint c);
[[nodiscard]] const char* mode_name(SearchMode m);

}  // namespace pinlab
