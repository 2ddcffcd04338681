#include "lacunary/errors.hpp"
#include "lacunary/hermite.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace lacunary;
using testutil::Q;
using testutil::Qs;

namespace {

struct Point {
    const char* x;
    const char* y;
};

const Point kPoints[] = {{"1", "1"}, {"-3/2", "1/2"}, {"2", "-1"}};

} // namespace

TEST(Hermite2, ClosedFormExamples)
{
    EXPECT_EQ(hermite2_eval(2, Q("3"), Q("2")), 13);
    EXPECT_EQ(hermite2_eval(5, Q("2"), Q("0")), 32);
    EXPECT_EQ(hermite2_eval(0, Q("7"), Q("5")), 1);
    EXPECT_EQ(to_string(hermite2_table(2)), "x^2 + 2 y");
}

TEST(Hermite2, FrozenSeriesValues)
{
    // n! [t^n] exp(x t + y t^2), computed independently with sympy.
    const std::vector<std::vector<const char*>> expected{
        {"1", "1", "3", "7", "25", "81", "331", "1303", "5937"},
        {"1", "-3/2", "13/4", "-63/8", "345/16", "-2043/32", "13029/64", "-88119/128", "629169/256"},
        {"1", "2", "2", "-4", "-20", "-8", "184", "464", "-1648"},
    };
    for (std::size_t i = 0; i < 3; ++i) {
        for (unsigned n = 0; n <= 8; ++n) {
            EXPECT_EQ(hermite2_eval(n, Q(kPoints[i].x), Q(kPoints[i].y)), Q(expected[i][n])) << i << " n=" << n;
        }
    }
}

TEST(HermiteLacunary, FrozenSeriesValuesAndReduction)
{
    EXPECT_EQ(hermite_lacunary_eval(3, 3, Q("1"), Q("1")), 7);
    EXPECT_EQ(hermite_lacunary_eval(2, 5, Q("3"), Q("1")), 9);
    const std::vector<std::vector<const char*>> expected{
        {"1", "1", "1", "7", "25", "61", "481", "2731", "10417", "91225"},
        {"1", "-3/2", "9/4", "-3/8", "-207/16", "1917/32", "-6471/64", "-55107/128", "1131489/256", "-7742979/512"},
        {"1", "2", "4", "2", "-32", "-208", "-536", "1808", "29824", "149696"},
    };
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational x = Q(kPoints[i].x), y = Q(kPoints[i].y);
        for (unsigned n = 0; n <= 9; ++n) {
            EXPECT_EQ(hermite_lacunary_eval(n, 3, x, y), Q(expected[i][n]));
            EXPECT_EQ(hermite_lacunary_eval(n, 2, x, y), hermite2_eval(n, x, y));
        }
    }
    EXPECT_THROW(hermite_lacunary_eval(3, 1, Q("1"), Q("1")), UsageError);
    EXPECT_THROW((HermiteParams{3, 1}.validate()), UsageError);
}

TEST(HermiteMultivar, MatchesBruteForceCompositions)
{
    // n! sum over k1 + 2 k2 + 3 k3 = n of prod x_s^k_s / k_s!, enumerated in Python.
    const std::vector<const char*> ones{"1", "1", "3", "13", "49", "261", "1531", "9073"};
    const std::vector<const char*> mixed{"1", "1/2", "-7/4", "73/8", "529/16", "-5839/32", "43081/64", "1085113/128"};
    const auto a = Qs({"1", "1", "1"});
    const auto b = Qs({"1/2", "-1", "2"});
    for (unsigned n = 0; n <= 7; ++n) {
        EXPECT_EQ(hermite_multivar_eval(n, a), Q(ones[n])) << n;
        EXPECT_EQ(hermite_multivar_eval(n, b), Q(mixed[n])) << n;
    }
    EXPECT_EQ(to_string(hermite_multivar_table(3, 3)), "x1^3 + 6 x1 x2 + 6 x3");
}

TEST(HermiteMultivar, ReductionsAndErrors)
{
    const auto single = Qs({"3/2"});
    EXPECT_EQ(hermite_multivar_eval(4, single), Q("81/16"));
    for (unsigned n = 0; n <= 12; ++n) {
        const auto xy = Qs({"-3/2", "1/2"});
        EXPECT_EQ(hermite_multivar_eval(n, xy), hermite2_eval(n, xy[0], xy[1]));
    }
    EXPECT_THROW(hermite_multivar_eval(2, std::vector<Rational>{}), UsageError);
}

TEST(Hermite2, GenfunCheck)
{
    EXPECT_TRUE(hermite2_genfun_check(Q("1"), Q("1"), 16).passed());
    EXPECT_TRUE(hermite2_genfun_check(Q("-2"), Q("3"), 16).passed());
    const auto zero = hermite2_genfun_check(Q("0"), Q("0"), 8);
    EXPECT_TRUE(zero.passed());
    EXPECT_EQ(zero.details.size(), 9u);
    EXPECT_THROW(hermite2_genfun_check(Q("1"), Q("1"), 33), UsageError);
}

TEST(HeatOperator, MatchesSeriesForm)
{
    EXPECT_EQ(to_string(heat_operator_apply(2, Q("1"))), "x^2 + 2");
    EXPECT_EQ(to_string(heat_operator_apply(1, Q("5"))), "x");
    const PolyXY h4 = heat_operator_apply(4, Q("1/2"));
    for (const char* x : {"0", "1", "2"}) {
        EXPECT_EQ(h4.evaluate(Q(x), Q("0")), hermite2_eval(4, Q(x), Q("1/2")));
    }
}

TEST(EulerOperator, DilationExamples)
{
    PolyXY x2;
    x2.add_term(2, 0, Q("1"));
    EXPECT_EQ(to_string(euler_dilation_apply(x2, Q("3"))), "9 x^2");
    const PolyXY h2 = hermite2_table(2);
    EXPECT_EQ(euler_dilation_apply(h2, Q("1")), h2);
    EXPECT_EQ(to_string(euler_dilation_apply(h2, Q("2"), EulerOperator::XY)), "4 x^2 + 4 y");
    EXPECT_THROW(euler_dilation_apply(h2, Q("0")), DomainError);
    EXPECT_EQ(euler_weight(EulerOperator::X, 3, 2), 3u);
    EXPECT_EQ(euler_weight(EulerOperator::XY, 3, 2), 5u);
}

TEST(Hermite2, RecurrenceHoldsExactly)
{
    for (const auto& p : kPoints) {
        const Rational x = Q(p.x), y = Q(p.y);
        for (unsigned n = 1; n <= 20; ++n) {
            EXPECT_EQ(hermite2_eval(n + 1, x, y), x * hermite2_eval(n, x, y) + 2 * n * y * hermite2_eval(n - 1, x, y));
        }
    }
}

TEST(Hermite2, GenericEvaluationOverReals)
{
    set_working_digits(50);
    const Real v = hermite2_at<Real>(5, to_real(Q("1/3")), to_real(Q("-2")));
    EXPECT_LT(abs(v - to_real(hermite2_eval(5, Q("1/3"), Q("-2")))), Real("1e-45"));
}
