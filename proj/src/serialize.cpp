#include "lacunary/serialize.hpp"

#include "lacunary/errors.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace lacunary {

namespace {

bool looks_like_float(const std::string& s)
{
    if (s.empty()) {
        return false;
    }
    bool digit = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit = true;
        } else if (c == '.' || c == 'e' || c == 'E' || ((c == '-' || c == '+') && (i == 0 || s[i - 1] == 'e' || s[i - 1] == 'E'))) {
            continue;
        } else {
            return false;
        }
    }
    return digit;
}

unsigned significant_digits(const std::string& s)
{
    unsigned count = 0;
    bool leading = true;
    for (char c : s) {
        if (c == 'e' || c == 'E') {
            break;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            continue;
        }
        if (leading && c == '0') {
            continue;
        }
        leading = false;
        ++count;
    }
    return count == 0 ? 1 : count;
}

std::string params_string(const ParamList& params)
{
    std::string s;
    for (const auto& [k, v] : params) {
        s += (s.empty() ? "" : ";") + k + "=" + v;
    }
    return s;
}

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "text") {
        return Format::Text;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw UsageError("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

nlohmann::json rational_to_json(const Rational& value)
{
    return {{"num", numerator_of(value).str()}, {"den", denominator_of(value).str()}};
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string()) {
        throw UsageError("expected {\"num\", \"den\"} strings");
    }
    const std::string num = j["num"].get<std::string>();
    const std::string den = j["den"].get<std::string>();
    if (den.find('/') != std::string::npos || num.find('/') != std::string::npos) {
        throw UsageError("rational parts must be integers");
    }
    const Rational d = parse_rational(den);
    if (d == 0) {
        throw UsageError("zero denominator");
    }
    return parse_rational(num) / d;
}

nlohmann::json real_to_json(const Real& value, unsigned digits10)
{
    return {{"value", to_string(value, digits10)}, {"precision", digits10}};
}

nlohmann::json double_to_json(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return {{"value", std::string(buf)}, {"precision", 17}};
}

nlohmann::json value_to_json(const std::string& text)
{
    try {
        return rational_to_json(parse_rational(text));
    } catch (const UsageError&) {
    }
    if (looks_like_float(text)) {
        return {{"value", text}, {"precision", significant_digits(text)}};
    }
    return text;
}

nlohmann::json report_to_json(const VerificationReport& report)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : report.params) {
        params[k] = value_to_json(v);
    }
    nlohmann::json details = nlohmann::json::array();
    for (const auto& d : report.details) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto& [k, v] : d.values) {
            values[k] = value_to_json(v);
        }
        details.push_back({{"index", d.index}, {"values", values}});
    }
    nlohmann::json j = {{"identity", report.identity},
                        {"params", params},
                        {"status", to_string(report.status)},
                        {"deviation", double_to_json(report.max_abs_deviation)},
                        {"tolerance", double_to_json(report.tolerance)},
                        {"details", details}};
    if (!report.note.empty()) {
        j["note"] = report.note;
    }
    return j;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
        out.push_back(report_to_json(r));
    }
    return out;
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << "name,params,status,deviation\n";
    for (const auto& r : reports) {
        os << csv_field(r.identity) << ',' << csv_field(params_string(r.params)) << ',' << to_string(r.status) << ','
           << format_double(r.max_abs_deviation) << '\n';
    }
    return os.str();
}

std::string report_to_text(const VerificationReport& report)
{
    std::string line = to_string(report.status) + "  " + report.identity;
    for (const auto& [k, v] : report.params) {
        line += " " + k + "=" + v;
    }
    line += "  deviation=" + format_double(report.max_abs_deviation);
    if (!report.note.empty()) {
        line += "  (" + report.note + ")";
    }
    return line;
}

} // namespace lacunary
