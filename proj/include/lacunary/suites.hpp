#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/report.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lacunary {

/// Closed integer range lo..hi.
struct IndexRange {
    unsigned lo = 0;
    unsigned hi = 0;

    std::vector<unsigned> values() const;
};

/// "a..b" or a single "a". Throws UsageError on malformed or empty ranges.
IndexRange parse_range(std::string_view text);

/// {-3/2, -1, -1/2, 0, 1/2, 1, 2}, sorted.
std::vector<Rational> small_grid();

/// Overrides for a suite sweep. Unset ranges fall back to the suite defaults;
/// the index names follow the checked functions (e.g. m is the derivative order
/// for rodriguez-chebyshev but the lacunarity for rainville).
struct SuiteOptions {
    std::vector<Rational> grid = small_grid();
    std::optional<IndexRange> n;
    std::optional<IndexRange> m;
    std::optional<IndexRange> l;
    std::optional<IndexRange> p;
    std::size_t order = 0;  // 0: suite default
    std::size_t rule_size = 80;
    unsigned jobs = 1;
};

std::vector<std::string> suite_names();

/// Runs a named suite ("all" runs every suite). Reports come back in
/// enumeration order whatever the number of jobs. A check that throws is
/// recorded as a failed report carrying the error message.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options = {});

/// Runs independent tasks on up to `jobs` threads, keeping result order.
std::vector<VerificationReport> run_parallel(const std::vector<std::function<VerificationReport()>>& tasks,
                                             unsigned jobs);

} // namespace lacunary
