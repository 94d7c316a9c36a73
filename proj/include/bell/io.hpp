#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bell/bounds.hpp"
#include "bell/construct.hpp"
#include "bell/measures.hpp"
#include "bell/model.hpp"

namespace bell::io {

/// x rounded to 12 significant digits.
double round12(double x);
/// Locale-independent text with 12 significant digits.
std::string format12(double x);

using Model = std::variant<HiddenInput, SeparableOutput, Behavior>;

nlohmann::json to_json(const HiddenInput& input);
nlohmann::json to_json(const SeparableOutput& output);
nlohmann::json to_json(const Behavior& behavior);
nlohmann::json to_json(const MeasureReport& report);
nlohmann::json to_json(const std::vector<ReductionStage>& trace);

/// Throws FormatError for structural problems and InvalidModel for
/// probability violations.
Model model_from_json(const nlohmann::json& j, double tolerance = kNormTolerance);
HiddenInput input_from_json(const nlohmann::json& j, double tolerance = kNormTolerance);

/// Reads and parses a model file; FormatError if unreadable or malformed.
Model read_model(const std::string& path, double tolerance = kNormTolerance);
HiddenInput read_input(const std::string& path, double tolerance = kNormTolerance);
void write_json(const std::string& path, const nlohmann::json& j);

/// Region CSV: header "m,h" or "m,h,s", one point per line.
void write_region_csv(std::ostream& out, const BoundarySamples& samples);

}  // namespace bell::io
