#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/serialize.hpp"
#include "lacunary/suites.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lacunary {

enum class Command { Coeffs, Eval, Verify, Table, Asymptotic };

/// Everything the front end needs for one invocation.
struct RunConfig {
    Command command = Command::Verify;
    std::string target;  // family for coeffs/eval/table, suite for verify

    std::optional<IndexRange> n;
    std::optional<IndexRange> m;
    std::optional<IndexRange> l;
    std::optional<IndexRange> p;
    std::optional<Rational> gamma;
    std::optional<Rational> x;
    std::optional<Rational> y;
    std::vector<Rational> xs;
    std::vector<Rational> grid;  // empty: small grid

    std::size_t order = 0;
    std::size_t rule_size = 80;
    unsigned jobs = 1;
    unsigned digits = 0;  // 0: take LACUNARY_DIGITS or the default

    // asymptotic
    std::vector<unsigned> ns{8, 16, 32, 64};
    std::vector<unsigned> legendre_ns{8, 16, 32};
    unsigned gegenbauer_n = 2;
    std::vector<Rational> gammas{Rational(10), Rational(100), Rational(1000)};

    Format format = Format::Text;
    std::string output;  // empty: stdout
};

/// Families accepted by coeffs, eval and table.
std::vector<std::string> family_names();

/// "small" or a comma-separated list of rationals.
std::vector<Rational> parse_grid(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<unsigned> parse_index_list(const std::string& text);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Executes a parsed configuration, writing results to `out` (or to
/// config.output) and diagnostics to `err`. Returns 0 iff every requested
/// verification passed. The working precision must already be set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name handled specially) into a config.
/// Returns std::nullopt after printing help; throws UsageError on bad input.
std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out);

/// Full front end: parse, set precision, run. Never throws.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lacunary
