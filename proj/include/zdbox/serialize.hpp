#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "zdbox/bounds.hpp"

namespace zdbox {

inline constexpr const char* kSchemaVersion = "zdbox-certificate/1";

/// Certificate bundle: the report with exact "num/den" endpoints and string vertex labels.
nlohmann::ordered_json to_json(const BoxicityReport& r);
/// Throws InvalidInput on schema violations.
BoxicityReport report_from_json(const nlohmann::ordered_json& j);

/// Deterministic text form (two-space indent, trailing newline).
std::string emit_bundle(const BoxicityReport& r);
BoxicityReport parse_bundle(std::string_view text);

}  // namespace zdbox
