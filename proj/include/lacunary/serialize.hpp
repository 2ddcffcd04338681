#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"
#include "lacunary/report.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lacunary {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; UsageError otherwise.
Format parse_format(std::string_view name);

/// {"num": "p", "den": "q"} with both parts as decimal strings.
nlohmann::json rational_to_json(const Rational& value);
/// Inverse of rational_to_json; UsageError on malformed input or a zero denominator.
Rational rational_from_json(const nlohmann::json& j);

/// {"value": "<scientific>", "precision": <significant digits>}
nlohmann::json real_to_json(const Real& value, unsigned digits10);
nlohmann::json double_to_json(double value);

/// Parameter and detail strings become rationals, floats, or stay strings.
nlohmann::json value_to_json(const std::string& text);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

/// Header "name,params,status,deviation" and one row per report.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

std::string report_to_text(const VerificationReport& report);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& text);

} // namespace lacunary
