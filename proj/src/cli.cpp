#include "lacunary/cli.hpp"

#include "lacunary/errors.hpp"
#include "lacunary/hermite.hpp"
#include "lacunary/identities.hpp"
#include "lacunary/legendre_family.hpp"
#include "lacunary/poly.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace lacunary {

namespace {

enum class Shape { XY, X, Multi };

struct FamilySpec {
    std::string name;
    Shape shape;
    bool needs_m = false;
    bool needs_gamma = false;
};

const std::vector<FamilySpec>& families()
{
    static const std::vector<FamilySpec> specs{
        {"hermite2", Shape::XY},
        {"hermite-lacunary", Shape::XY, true},
        {"hermite-multivar", Shape::Multi},
        {"chebyshev-u2", Shape::XY},
        {"humbert", Shape::XY, true},
        {"multivar-u", Shape::Multi},
        {"legendre2", Shape::XY},
        {"legendre-multivar", Shape::Multi},
        {"legendre", Shape::X},
        {"u2n", Shape::XY},
        {"gegenbauer", Shape::X, false, true},
    };
    return specs;
}

const FamilySpec& find_family(const std::string& name)
{
    for (const auto& f : families()) {
        if (f.name == name) {
            return f;
        }
    }
    std::string known;
    for (const auto& f : families()) {
        known += (known.empty() ? "" : ", ") + f.name;
    }
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
}

unsigned single(const std::optional<IndexRange>& r, const char* flag)
{
    if (!r) {
        throw UsageError(std::string("--") + flag + " is required");
    }
    if (r->lo != r->hi) {
        throw UsageError(std::string("--") + flag + " takes a single value here");
    }
    return r->lo;
}

struct Term {
    std::vector<unsigned> exponents;
    Rational coefficient;
};

// Exact coefficient table of one family member plus a floating evaluator.
struct FamilyTable {
    std::vector<Term> terms;
    std::string text;
    std::function<Real(const std::vector<Real>&)> evaluate;
};

FamilyTable from_xy(const PolyXY& poly)
{
    FamilyTable t;
    for (const auto& [e, c] : poly.terms()) {
        t.terms.push_back({{e.first, e.second}, c});
    }
    t.text = to_string(poly);
    t.evaluate = [poly](const std::vector<Real>& a) { return poly.evaluate(a.at(0), a.at(1)); };
    return t;
}

FamilyTable from_x(const Poly1& poly)
{
    FamilyTable t;
    for (int i = poly.degree(); i >= 0; --i) {
        if (poly.coefficient(static_cast<unsigned>(i)) != 0) {
            t.terms.push_back({{static_cast<unsigned>(i)}, poly.coefficient(static_cast<unsigned>(i))});
        }
    }
    t.text = to_string(poly, "x");
    t.evaluate = [poly](const std::vector<Real>& a) { return poly.evaluate(a.at(0)); };
    return t;
}

FamilyTable from_multi(const PolyMulti& poly)
{
    FamilyTable t;
    for (const auto& [e, c] : poly.terms()) {
        t.terms.push_back({e, c});
    }
    t.text = to_string(poly);
    t.evaluate = [poly](const std::vector<Real>& a) { return poly.evaluate(std::span<const Real>(a)); };
    return t;
}

struct Selection {
    const FamilySpec* spec;
    unsigned m = 2;
    Rational gamma = 1;
};

Selection select(const RunConfig& c)
{
    Selection s{&find_family(c.target)};
    if (s.spec->needs_m) {
        s.m = single(c.m, "m");
    }
    if (s.spec->needs_gamma) {
        if (!c.gamma) {
            throw UsageError("--gamma is required for " + s.spec->name);
        }
        s.gamma = *c.gamma;
    }
    return s;
}

FamilyTable family_table(const Selection& s, unsigned n, std::size_t arity)
{
    const std::string& f = s.spec->name;
    if (f == "hermite2") return from_xy(hermite2_table(n));
    if (f == "hermite-lacunary") return from_xy(hermite_lacunary_table({n, s.m}));
    if (f == "hermite-multivar") return from_multi(hermite_multivar_table(n, arity));
    if (f == "chebyshev-u2") return from_xy(chebyshev_u2_table(n));
    if (f == "humbert") return from_xy(humbert_table(n, s.m));
    if (f == "multivar-u") return from_multi(multivar_u_table(n, arity));
    if (f == "legendre2") return from_xy(legendre2_table(n));
    if (f == "legendre-multivar") return from_multi(legendre_multivar_table(n, arity));
    if (f == "legendre") return from_x(legendre_classical_table(n));
    if (f == "u2n") return from_xy(u2n_table(n));
    return from_x(gegenbauer_table(n, s.gamma));
}

Rational family_exact(const Selection& s, unsigned n, const std::vector<Rational>& a)
{
    const std::string& f = s.spec->name;
    if (f == "hermite2") return hermite2_eval(n, a[0], a[1]);
    if (f == "hermite-lacunary") return hermite_lacunary_eval(n, s.m, a[0], a[1]);
    if (f == "hermite-multivar") return hermite_multivar_eval(n, a);
    if (f == "chebyshev-u2") return chebyshev_u2_eval(n, a[0], a[1]);
    if (f == "humbert") return humbert_eval(n, s.m, a[0], a[1]);
    if (f == "multivar-u") return multivar_u_eval(n, a);
    if (f == "legendre2") return legendre2_eval(n, a[0], a[1]);
    if (f == "legendre-multivar") return legendre_multivar_at<Rational>(n, a);
    if (f == "legendre") return legendre_classical(n, a[0]);
    if (f == "u2n") return u2n_eval(n, a[0], a[1]);
    return gegenbauer_eval(n, s.gamma, a[0]);
}

std::string join(const std::vector<Rational>& xs)
{
    std::string s;
    for (const auto& x : xs) {
        s += (s.empty() ? "" : ",") + to_string(x);
    }
    return s;
}

std::vector<std::string> arg_names(const Selection& s, std::size_t arity)
{
    switch (s.spec->shape) {
    case Shape::XY:
        return s.spec->name == "u2n" ? std::vector<std::string>{"alpha", "beta"} : std::vector<std::string>{"x", "y"};
    case Shape::X:
        return {"x"};
    case Shape::Multi:
        break;
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= arity; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

std::vector<Rational> point_args(const Selection& s, const RunConfig& c)
{
    switch (s.spec->shape) {
    case Shape::XY:
        if (!c.x || !c.y) {
            throw UsageError(s.spec->name + " needs --x and --y");
        }
        return {*c.x, *c.y};
    case Shape::X:
        if (!c.x) {
            throw UsageError(s.spec->name + " needs --x");
        }
        return {*c.x};
    case Shape::Multi:
        break;
    }
    if (c.xs.empty()) {
        throw UsageError(s.spec->name + " needs --xs");
    }
    return c.xs;
}

nlohmann::json args_json(const Selection& s, const std::vector<Rational>& args)
{
    nlohmann::json j = nlohmann::json::object();
    const auto names = arg_names(s, args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        j[names[i]] = rational_to_json(args[i]);
    }
    return j;
}

nlohmann::json selection_json(const Selection& s)
{
    nlohmann::json j = nlohmann::json::object();
    if (s.spec->needs_m) {
        j["m"] = s.m;
    }
    if (s.spec->needs_gamma) {
        j["gamma"] = rational_to_json(s.gamma);
    }
    return j;
}

std::string exponent_string(const std::vector<unsigned>& e)
{
    std::string s;
    for (unsigned v : e) {
        s += (s.empty() ? "" : ";") + std::to_string(v);
    }
    return s;
}

int run_coeffs(const RunConfig& c, std::ostream& out)
{
    const Selection s = select(c);
    const unsigned n = single(c.n, "n");
    std::size_t arity = 0;
    if (s.spec->shape == Shape::Multi) {
        arity = c.p ? single(c.p, "p") : c.xs.size();
        if (arity == 0) {
            throw UsageError(s.spec->name + " needs --p");
        }
    }
    const FamilyTable t = family_table(s, n, arity);
    switch (c.format) {
    case Format::Text:
        out << t.text << '\n';
        break;
    case Format::Json: {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& term : t.terms) {
            terms.push_back({{"exponents", term.exponents}, {"coefficient", rational_to_json(term.coefficient)}});
        }
        nlohmann::json j = {{"family", s.spec->name}, {"n", n}, {"params", selection_json(s)},
                            {"polynomial", t.text}, {"terms", terms}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "exponents,coefficient\n";
        for (const auto& term : t.terms) {
            out << exponent_string(term.exponents) << ',' << to_string(term.coefficient) << '\n';
        }
        break;
    }
    return kExitOk;
}

int run_eval(const RunConfig& c, std::ostream& out)
{
    const Selection s = select(c);
    const unsigned n = single(c.n, "n");
    const auto args = point_args(s, c);
    const Rational exact = family_exact(s, n, args);
    std::vector<Real> real_args;
    for (const auto& a : args) {
        real_args.push_back(to_real(a));
    }
    const Real value = family_table(s, n, args.size()).evaluate(real_args);
    const unsigned digits = working_digits();
    switch (c.format) {
    case Format::Text:
        out << to_string(exact) << '\n' << to_string(value, digits) << '\n';
        break;
    case Format::Json: {
        nlohmann::json j = {{"family", s.spec->name},
                            {"n", n},
                            {"params", selection_json(s)},
                            {"args", args_json(s, args)},
                            {"exact", rational_to_json(exact)},
                            {"value", real_to_json(value, digits)}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "family,n,args,exact,value\n"
            << s.spec->name << ',' << n << ',' << csv_field(join(args)) << ',' << to_string(exact) << ','
            << to_string(value, digits) << '\n';
        break;
    }
    return kExitOk;
}

int run_table(const RunConfig& c, std::ostream& out)
{
    const Selection s = select(c);
    const auto ns = (c.n ? *c.n : IndexRange{0, 8}).values();
    const std::vector<Rational> grid = c.grid.empty() ? small_grid() : c.grid;
    std::vector<std::vector<Rational>> points;
    switch (s.spec->shape) {
    case Shape::XY:
        for (const auto& x : c.x ? std::vector<Rational>{*c.x} : grid) {
            for (const auto& y : c.y ? std::vector<Rational>{*c.y} : grid) {
                points.push_back({x, y});
            }
        }
        break;
    case Shape::X:
        for (const auto& x : c.x ? std::vector<Rational>{*c.x} : grid) {
            points.push_back({x});
        }
        break;
    case Shape::Multi:
        points.push_back(point_args(s, c));
        break;
    }
    const unsigned digits = working_digits();
    nlohmann::json rows = nlohmann::json::array();
    if (c.format == Format::Csv) {
        out << "family,n,args,exact,value\n";
    }
    for (unsigned n : ns) {
        const FamilyTable t = family_table(s, n, points.front().size());
        for (const auto& args : points) {
            const Rational exact = family_exact(s, n, args);
            std::vector<Real> real_args;
            for (const auto& a : args) {
                real_args.push_back(to_real(a));
            }
            const Real value = t.evaluate(real_args);
            switch (c.format) {
            case Format::Text:
                out << "n=" << n << "  " << join(args) << "  " << to_string(exact) << "  " << to_string(value, 20)
                    << '\n';
                break;
            case Format::Json:
                rows.push_back({{"n", n},
                                {"args", args_json(s, args)},
                                {"exact", rational_to_json(exact)},
                                {"value", real_to_json(value, digits)}});
                break;
            case Format::Csv:
                out << s.spec->name << ',' << n << ',' << csv_field(join(args)) << ',' << to_string(exact) << ','
                    << to_string(value, digits) << '\n';
                break;
            }
        }
    }
    if (c.format == Format::Json) {
        nlohmann::json j = {{"family", s.spec->name}, {"params", selection_json(s)}, {"rows", rows}};
        out << j.dump(2) << '\n';
    }
    return kExitOk;
}

int emit_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& out)
{
    std::size_t failed = 0;
    for (const auto& r : reports) {
        failed += r.passed() ? 0 : 1;
    }
    switch (format) {
    case Format::Text:
        for (const auto& r : reports) {
            out << report_to_text(r) << '\n';
        }
        out << "summary: " << reports.size() << " checks, " << failed << " failed\n";
        break;
    case Format::Json:
        out << reports_to_json(reports).dump(2) << '\n';
        break;
    case Format::Csv:
        out << reports_to_csv(reports);
        break;
    }
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_verify(const RunConfig& c, std::ostream& out)
{
    SuiteOptions o;
    if (!c.grid.empty()) {
        o.grid = c.grid;
    }
    o.n = c.n;
    o.m = c.m;
    o.l = c.l;
    o.p = c.p;
    o.order = c.order;
    o.rule_size = c.rule_size;
    o.jobs = c.jobs;
    return emit_reports(run_suite(c.target, o), c.format, out);
}

int run_asymptotic(const RunConfig& c, std::ostream& out)
{
    const Rational x = c.x.value_or(Rational(1));
    const Rational y = c.y.value_or(Rational(1));
    auto guarded = [](std::string identity, ParamList params, const std::function<VerificationReport()>& body) {
        try {
            return body();
        } catch (const DomainError& e) {
            auto report = make_report(std::move(identity), std::move(params));
            fail(report, e.what());
            return report;
        }
    };
    const ParamList params{{"x", to_string(x)}, {"y", to_string(y)}};
    std::vector<VerificationReport> reports;
    reports.push_back(guarded("asymptotic-hermite", params, [&] { return asymptotic_hermite(x, y, c.ns); }));
    reports.push_back(guarded("asymptotic-legendre", params,
                              [&] { return asymptotic_legendre(x, y, c.legendre_ns, c.rule_size); }));
    reports.push_back(guarded("asymptotic-gegenbauer", {{"x", to_string(x)}},
                              [&] { return asymptotic_gegenbauer(x, c.gegenbauer_n, c.gammas); }));
    return emit_reports(reports, c.format, out);
}

template <class T, class F>
std::vector<T> split_list(const std::string& text, F parse_one)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw UsageError("empty item in list '" + text + "'");
        }
        out.push_back(parse_one(item));
    }
    if (out.empty()) {
        throw UsageError("empty list");
    }
    return out;
}

} // namespace

std::vector<std::string> family_names()
{
    std::vector<std::string> names;
    for (const auto& f : families()) {
        names.push_back(f.name);
    }
    return names;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
    return split_list<Rational>(text, [](const std::string& s) { return parse_rational(s); });
}

std::vector<unsigned> parse_index_list(const std::string& text)
{
    return split_list<unsigned>(text, [](const std::string& s) { return single(parse_range(s), "ns"); });
}

std::vector<Rational> parse_grid(const std::string& text)
{
    if (text == "small") {
        return small_grid();
    }
    auto values = parse_rational_list(text);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
        file.open(config.output);
        if (!file) {
            err << "error: cannot open " << config.output << " for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }
    try {
        switch (config.command) {
        case Command::Coeffs:
            return run_coeffs(config, *sink);
        case Command::Eval:
            return run_eval(config, *sink);
        case Command::Table:
            return run_table(config, *sink);
        case Command::Verify:
            return run_verify(config, *sink);
        case Command::Asymptotic:
            return run_asymptotic(config, *sink);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out)
{
    CLI::App app{"Exact evaluation and identity checks for Hermite, Chebyshev, Humbert, Legendre and Gegenbauer "
                 "polynomial families.",
                 "lacunary"};
    app.require_subcommand(1, 1);

    struct Raw {
        std::string target, n, m, l, p, gamma, x, y, xs, grid, ns, legendre_ns, gammas, format = "text", output;
        std::size_t order = 0, rule_size = kDefaultRuleSize;
        unsigned jobs = 1, gegenbauer_n = 2, digits = 0;
    } raw;

    app.add_option("--digits", raw.digits, "Working precision in decimal digits (overrides LACUNARY_DIGITS)");

    auto output_opts = [&](CLI::App* sub) {
        sub->add_option("--format", raw.format, "text, json or csv")->capture_default_str();
        sub->add_option("--output,-o", raw.output, "Write to this file instead of stdout");
    };
    auto family_opts = [&](CLI::App* sub) {
        sub->add_option("family", raw.target, "Polynomial family")->required();
        sub->add_option("--m", raw.m, "Lacunarity for hermite-lacunary and humbert");
        sub->add_option("--gamma", raw.gamma, "Gegenbauer parameter (rational)");
    };

    auto* coeffs = app.add_subcommand("coeffs", "Print the exact monomial table of a polynomial");
    family_opts(coeffs);
    coeffs->add_option("--n", raw.n, "Degree")->required();
    coeffs->add_option("--p", raw.p, "Number of variables for the multi-variable families");
    coeffs->add_option("--xs", raw.xs, "Comma-separated arguments (arity for multi-variable families)");
    output_opts(coeffs);

    auto* eval = app.add_subcommand("eval", "Evaluate a polynomial exactly and in floating point");
    family_opts(eval);
    eval->add_option("--n", raw.n, "Degree")->required();
    eval->add_option("--x", raw.x, "First argument");
    eval->add_option("--y", raw.y, "Second argument");
    eval->add_option("--xs", raw.xs, "Comma-separated arguments for multi-variable families");
    output_opts(eval);

    auto* table = app.add_subcommand("table", "Sweep a polynomial over degrees and a parameter grid");
    family_opts(table);
    table->add_option("--n", raw.n, "Degree range a..b (default 0..8)");
    table->add_option("--x", raw.x, "Fix the first argument instead of sweeping it");
    table->add_option("--y", raw.y, "Fix the second argument instead of sweeping it");
    table->add_option("--xs", raw.xs, "Arguments for multi-variable families");
    table->add_option("--grid", raw.grid, "'small' or a comma-separated list of rationals");
    output_opts(table);

    auto* verify = app.add_subcommand("verify", "Run a named identity suite");
    verify->add_option("suite", raw.target, "Suite name or 'all'")->required();
    verify->add_option("--n", raw.n, "Range a..b for the suite's n index");
    verify->add_option("--m", raw.m, "Range a..b for the suite's m index");
    verify->add_option("--l", raw.l, "Range a..b for the shift index l");
    verify->add_option("--p", raw.p, "Range a..b for the number of variables");
    verify->add_option("--grid", raw.grid, "'small' or a comma-separated list of rationals");
    verify->add_option("--order", raw.order, "Series truncation order (0: suite default)");
    verify->add_option("--nodes", raw.rule_size, "Quadrature rule size")->capture_default_str();
    verify->add_option("--jobs,-j", raw.jobs, "Worker threads (0: all cores)")->capture_default_str();
    output_opts(verify);

    auto* asym = app.add_subcommand("asymptotic", "Run the three asymptotic-limit checks");
    asym->add_option("--x", raw.x, "x (default 1)");
    asym->add_option("--y", raw.y, "y (default 1)");
    asym->add_option("--ns", raw.ns, "Hermite degrees (default 8,16,32,64)");
    asym->add_option("--legendre-ns", raw.legendre_ns, "Legendre degrees (default 8,16,32)");
    asym->add_option("--gegenbauer-n", raw.gegenbauer_n, "Gegenbauer degree")->capture_default_str();
    asym->add_option("--gammas", raw.gammas, "Increasing gamma values (default 10,100,1000)");
    asym->add_option("--nodes", raw.rule_size, "Quadrature rule size")->capture_default_str();
    output_opts(asym);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    if (coeffs->parsed()) {
        c.command = Command::Coeffs;
    } else if (eval->parsed()) {
        c.command = Command::Eval;
    } else if (table->parsed()) {
        c.command = Command::Table;
    } else if (verify->parsed()) {
        c.command = Command::Verify;
    } else {
        c.command = Command::Asymptotic;
    }
    c.target = raw.target;
    auto range = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional(parse_range(s)); };
    auto rational = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional(parse_rational(s)); };
    c.n = range(raw.n);
    c.m = range(raw.m);
    c.l = range(raw.l);
    c.p = range(raw.p);
    c.gamma = rational(raw.gamma);
    c.x = rational(raw.x);
    c.y = rational(raw.y);
    if (!raw.xs.empty()) {
        c.xs = parse_rational_list(raw.xs);
    }
    if (!raw.grid.empty()) {
        c.grid = parse_grid(raw.grid);
    }
    if (!raw.ns.empty()) {
        c.ns = parse_index_list(raw.ns);
    }
    if (!raw.legendre_ns.empty()) {
        c.legendre_ns = parse_index_list(raw.legendre_ns);
    }
    if (!raw.gammas.empty()) {
        c.gammas = parse_rational_list(raw.gammas);
    }
    c.gegenbauer_n = raw.gegenbauer_n;
    c.order = raw.order;
    c.rule_size = raw.rule_size;
    c.jobs = raw.jobs;
    c.digits = raw.digits;
    c.format = parse_format(raw.format);
    c.output = raw.output;
    return c;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        auto config = parse_command_line(args, out);
        if (!config) {
            return kExitOk;
        }
        unsigned digits = config->digits ? config->digits : digits_from_environment();
        if (digits < kMinimumDigits) {
            throw UsageError("precision must be at least " + std::to_string(kMinimumDigits) + " digits");
        }
        set_working_digits(digits);
        return run(*config, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

} // namespace lacunary
