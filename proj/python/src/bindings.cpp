#include "lacunary/cli.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/hermite.hpp"
#include "lacunary/legendre_family.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/serialize.hpp"
#include "lacunary/suites.hpp"
#include "lacunary/umbral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lacunary;

namespace {

Rational q(const std::string& s) { return parse_rational(s); }

std::vector<Rational> qs(const std::vector<std::string>& v)
{
    std::vector<Rational> out;
    for (const auto& s : v) {
        out.push_back(q(s));
    }
    return out;
}

template <class F>
auto xy(F f)
{
    return [f](unsigned n, const std::string& x, const std::string& y) { return to_string(f(n, q(x), q(y))); };
}

} // namespace

PYBIND11_MODULE(_lacunary, m)
{
    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<EvaluationError>(m, "EvaluationError", base.ptr());

    m.def("set_working_digits", &set_working_digits, py::arg("digits"));
    m.def("working_digits", &working_digits);

    m.def("hermite2", xy(hermite2_eval), py::arg("n"), py::arg("x"), py::arg("y"));
    m.def("chebyshev_u2", xy(chebyshev_u2_eval), py::arg("n"), py::arg("x"), py::arg("y"));
    m.def("legendre2", xy(legendre2_eval), py::arg("n"), py::arg("x"), py::arg("y"));
    m.def("umbral_hermite", xy(umbral_hermite_eval), py::arg("n"), py::arg("x"), py::arg("y"));
    m.def("u2n", xy(u2n_eval), py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "humbert",
        [](unsigned n, unsigned mm, const std::string& x, const std::string& y) {
            return to_string(humbert_eval(n, mm, q(x), q(y)));
        },
        py::arg("n"), py::arg("m"), py::arg("x"), py::arg("y"));
    m.def(
        "hermite_lacunary",
        [](unsigned n, unsigned mm, const std::string& x, const std::string& y) {
            return to_string(hermite_lacunary_eval(n, mm, q(x), q(y)));
        },
        py::arg("n"), py::arg("m"), py::arg("x"), py::arg("y"));
    m.def(
        "multivar_u", [](unsigned n, const std::vector<std::string>& xs) { return to_string(multivar_u_eval(n, qs(xs))); },
        py::arg("n"), py::arg("xs"));
    m.def(
        "hermite_multivar",
        [](unsigned n, const std::vector<std::string>& xs) { return to_string(hermite_multivar_eval(n, qs(xs))); },
        py::arg("n"), py::arg("xs"));
    m.def(
        "legendre", [](unsigned n, const std::string& x) { return to_string(legendre_classical(n, q(x))); }, py::arg("n"),
        py::arg("x"));
    m.def(
        "gegenbauer",
        [](unsigned n, const std::string& g, const std::string& x) { return to_string(gegenbauer_eval(n, q(g), q(x))); },
        py::arg("n"), py::arg("gamma"), py::arg("x"));

    m.def(
        "legendre2_table", [](unsigned n) { return to_string(legendre2_table(n)); }, py::arg("n"));
    m.def(
        "hermite2_table", [](unsigned n) { return to_string(hermite2_table(n)); }, py::arg("n"));

    m.def(
        "laguerre_rule",
        [](const std::string& alpha, std::size_t count) {
            const auto rule = build_rule(q(alpha), count);
            std::vector<std::string> nodes, weights;
            for (std::size_t i = 0; i < rule.size(); ++i) {
                nodes.push_back(to_string(rule.nodes[i]));
                weights.push_back(to_string(rule.weights[i]));
            }
            return py::make_tuple(nodes, weights);
        },
        py::arg("alpha"), py::arg("count") = kDefaultRuleSize);

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, const std::vector<std::string>& grid, unsigned jobs) {
            SuiteOptions o;
            if (!grid.empty()) {
                o.grid = qs(grid);
            }
            o.jobs = jobs;
            std::vector<VerificationReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(name, o);
            }
            return reports_to_json(reports).dump();
        },
        py::arg("name"), py::arg("grid") = std::vector<std::string>{}, py::arg("jobs") = 1u);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli_main(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
