#include "lacunary/errors.hpp"
#include "lacunary/poly.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"
#include "lacunary/report.hpp"
#include "lacunary/serialize.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace lacunary;
using testutil::Q;

TEST(Rational, ParsesCanonicalForms)
{
    EXPECT_EQ(Q("6/8"), Rational(3, 4));
    EXPECT_EQ(Q("-3/2"), Rational(-3, 2));
    EXPECT_EQ(Q("+5"), Rational(5));
    EXPECT_EQ(to_string(Q("10/4")), "5/2");
    EXPECT_EQ(to_string(Q("0/7")), "0");
}

TEST(Rational, RejectsMalformedText)
{
    for (const char* bad : {"", "1/", "/2", "1.5", "abc", "1/0", "1//2", "- 1", "4/-2"}) {
        EXPECT_THROW(parse_rational(bad), UsageError) << bad;
    }
}

TEST(Rational, FactorialBinomialPow)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(pow(Rational(0), 0), 1);
    EXPECT_THROW(pow(Rational(0), -1), DomainError);
}

TEST(Real, PrecisionAndConversion)
{
    set_working_digits(50);
    EXPECT_EQ(working_digits(), 50u);
    const Real third = to_real(Rational(1, 3));
    EXPECT_LT(abs(third * 3 - 1), Real("1e-48"));
    EXPECT_NEAR(testutil::to_double(pi()), 3.14159265358979323846, 1e-15);
}

TEST(Poly1, ArithmeticAndDerivative)
{
    const Poly1 p({Q("1"), Q("-2"), Q("3")});  // 1 - 2x + 3x^2
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.derivative(), Poly1({Q("-2"), Q("6")}));
    EXPECT_EQ(p.derivative(2), Poly1({Q("6")}));
    EXPECT_TRUE(p.derivative(3).is_zero());
    EXPECT_EQ(p.evaluate(Q("1/2")), Q("3/4"));
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_EQ(p * Poly1({Q("0"), Q("1")}), Poly1({Q("0"), Q("1"), Q("-2"), Q("3")}));
    EXPECT_EQ(to_string(p, "t"), "3 t^2 - 2 t + 1");
}

TEST(PolyXY, TermsAndFormatting)
{
    PolyXY p;
    p.add_term(2, 0, Q("3/8"));
    p.add_term(0, 1, Q("-1/2"));
    EXPECT_EQ(to_string(p), "3/8 x^2 - 1/2 y");
    p.add_term(2, 0, Q("-3/8"));
    EXPECT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.evaluate(Q("5"), Q("2")), Q("-1"));
    EXPECT_EQ(to_string(PolyXY()), "0");
}

TEST(PolyXY, DerivativeAndSubstitution)
{
    PolyXY p;
    p.add_term(3, 1, Q("2"));
    p.add_term(1, 0, Q("1"));
    const PolyXY d = p.derivative_x(2);
    EXPECT_EQ(d.coefficient(1, 1), Q("12"));
    EXPECT_EQ(d.terms().size(), 1u);
    EXPECT_EQ(p.substitute_y(Q("1/2")), Poly1({Q("0"), Q("1"), Q("0"), Q("1")}));
}

TEST(PolyMulti, EvaluateChecksArity)
{
    PolyMulti p(3);
    p.add_term({3, 0, 0}, Q("1"));
    p.add_term({1, 1, 0}, Q("6"));
    p.add_term({0, 0, 1}, Q("6"));
    const auto args = testutil::Qs({"1", "1", "1"});
    EXPECT_EQ(p.evaluate(std::span<const Rational>(args)), Q("13"));
    const auto two = testutil::Qs({"1", "1"});
    EXPECT_THROW(p.evaluate(std::span<const Rational>(two)), UsageError);
    EXPECT_EQ(to_string(p), "x1^3 + 6 x1 x2 + 6 x3");
}

TEST(Report, ExactAndNumericRecording)
{
    auto r = make_report("demo", {{"x", "1"}});
    record_exact(r, "n=0", Q("1/2"), Q("1/2"));
    EXPECT_TRUE(r.passed());
    record_exact(r, "n=1", Q("1/2"), Q("1/3"));
    EXPECT_FALSE(r.passed());
    EXPECT_NEAR(r.max_abs_deviation, 1.0 / 6.0, 1e-15);

    auto n = make_report("numeric", {}, 1e-6);
    record_numeric(n, "a", to_real(Q("1")), to_real(Q("1")) + Real("1e-7"));
    EXPECT_TRUE(n.passed());
    record_numeric(n, "b", to_real(Q("1")), to_real(Q("2")));
    EXPECT_FALSE(n.passed());
}

TEST(Serialize, RationalJsonRoundTrip)
{
    for (const char* s : {"0", "-3/2", "12345678901234567890123/7", "1/3"}) {
        const Rational q = Q(s);
        const auto j = rational_to_json(q);
        EXPECT_TRUE(j["num"].is_string());
        EXPECT_TRUE(j["den"].is_string());
        EXPECT_EQ(rational_from_json(nlohmann::json::parse(j.dump())), q);
    }
    EXPECT_EQ(rational_to_json(Q("-3/2"))["num"], "-3");
    EXPECT_EQ(rational_to_json(Q("-3/2"))["den"], "2");
    EXPECT_THROW(rational_from_json(nlohmann::json{{"num", "1"}, {"den", "0"}}), UsageError);
    EXPECT_THROW(rational_from_json(nlohmann::json{{"num", 1}, {"den", "2"}}), UsageError);
}

TEST(Serialize, ReportJsonSchema)
{
    auto r = make_report("demo", {{"x", "1/2"}, {"ns", "8,16"}});
    record_deviation(r, "n=8", {{"relative_error", "1.5e-03"}}, 1.5e-3, true);
    const auto j = report_to_json(r);
    for (const char* key : {"identity", "params", "status", "deviation", "details"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(rational_from_json(j["params"]["x"]), Q("1/2"));
    EXPECT_EQ(j["params"]["ns"], "8,16");
    EXPECT_EQ(j["details"][0]["values"]["relative_error"]["precision"], 2);
    EXPECT_TRUE(j["deviation"].contains("precision"));
}

TEST(Serialize, CsvQuotesListsAndFormats)
{
    auto r = make_report("demo", {{"x", "1"}, {"ns", "8,16"}});
    const std::string csv = reports_to_csv({r});
    EXPECT_EQ(csv, "name,params,status,deviation\ndemo,\"x=1;ns=8,16\",pass,0.000000e+00\n");
    EXPECT_EQ(parse_format("json"), Format::Json);
    EXPECT_THROW(parse_format("xml"), UsageError);
}
