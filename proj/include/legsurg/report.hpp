#pragma once

#include "legsurg/classify.hpp"
#include "legsurg/invariants.hpp"

#include <string>

#include <json.hpp>

namespace legsurg {

// Human-readable and structured renderings of reports. Rationals are
// serialized as reduced "p/q" strings (plain "p" when integral) so every
// value survives a round trip exactly; the human format may add a decimal
// approximation, clearly marked.

std::string invariants_text(const ClassicalData& data);
nlohmann::json invariants_json(const ClassicalData& data);

// Rough terminal sketch of a front word: strands run left to right, cusps
// open and close with rounded corners, crossings are marked on both rows.
std::string front_sketch(const FrontWord& word);

std::string report_text(const Report& report);
nlohmann::json report_json(const Report& report);

// Reconstructs verdict, rule evaluations, and staging data from an emitted
// JSON report; exact inverse of report_json for those fields.
Report report_from_json(const nlohmann::json& j);

}  // namespace legsurg
