#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lacunary {

using ParamList = std::vector<std::pair<std::string, std::string>>;

enum class Status { Pass, Fail };

/// Route values compared at one index (degree, order, grid point...).
struct ReportDetail {
    std::string index;
    ParamList values;
};

/// Outcome of one identity check at one parameter tuple. Exact checks carry a
/// zero tolerance; numeric ones carry the tolerance they were judged against.
struct VerificationReport {
    std::string identity;
    ParamList params;
    Status status = Status::Pass;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    std::vector<ReportDetail> details;
    std::string note;

    bool passed() const { return status == Status::Pass; }
};

VerificationReport make_report(std::string identity, ParamList params, double tolerance = 0.0);

/// Records lhs == rhs as an exact comparison; any difference fails the report.
void record_exact(VerificationReport& report, std::string index, const Rational& lhs, const Rational& rhs);

/// Records |lhs - rhs| against report.tolerance.
void record_numeric(VerificationReport& report, std::string index, const Real& lhs, const Real& rhs);

/// Records a deviation computed by the caller, failing the report when `ok` is false.
void record_deviation(VerificationReport& report, std::string index, ParamList values, double deviation, bool ok);

/// Marks the report failed with an explanation (domain error, precondition...).
void fail(VerificationReport& report, std::string note);

std::string to_string(Status status);

} // namespace lacunary
