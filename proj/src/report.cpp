#include "lacunary/report.hpp"

#include <algorithm>
#include <cmath>

namespace lacunary {

VerificationReport make_report(std::string identity, ParamList params, double tolerance)
{
    VerificationReport report;
    report.identity = std::move(identity);
    report.params = std::move(params);
    report.tolerance = tolerance;
    return report;
}

void record_exact(VerificationReport& report, std::string index, const Rational& lhs, const Rational& rhs)
{
    report.details.push_back({std::move(index), {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}}});
    if (lhs != rhs) {
        Rational diff = lhs - rhs;
        double dev = std::fabs(diff.convert_to<double>());
        report.max_abs_deviation = std::max(report.max_abs_deviation, dev == 0.0 ? 1e-300 : dev);
        report.status = Status::Fail;
    }
}

void record_numeric(VerificationReport& report, std::string index, const Real& lhs, const Real& rhs)
{
    Real diff = abs(lhs - rhs);
    double dev = diff.convert_to<double>();
    report.details.push_back({std::move(index), {{"lhs", to_string(lhs, 25)}, {"rhs", to_string(rhs, 25)}}});
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    if (!(dev <= report.tolerance)) {
        report.status = Status::Fail;
    }
}

void record_deviation(VerificationReport& report, std::string index, ParamList values, double deviation, bool ok)
{
    report.details.push_back({std::move(index), std::move(values)});
    report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
    if (!ok) {
        report.status = Status::Fail;
    }
}

void fail(VerificationReport& report, std::string note)
{
    report.status = Status::Fail;
    if (!report.note.empty()) {
        report.note += "; ";
    }
    report.note += note;
}

std::string to_string(Status status)
{
    return status == Status::Pass ? "pass" : "fail";
}

} // namespace lacunary
