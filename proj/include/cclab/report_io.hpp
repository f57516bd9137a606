#pragma once

#include <string>

#include "json.hpp"

#include "cclab/individual.hpp"

namespace cclab {

inline constexpr const char* kProfileSchema = "cclab.profile/1";

// "inf", an integer, or a decimal with 6 significant digits.
std::string format_value(double v);

// First line "# schema=... measure=... code=... target=...", then
// "alpha,value,witness_hex" and one row per alpha.
std::string profile_csv(const ComplexityProfile& p);
nlohmann::json to_json(const ComplexityProfile& p);
nlohmann::json to_json(const TccIdentityReport& r);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace cclab
