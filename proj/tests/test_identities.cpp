#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"
#include "lacunary/identities.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace lacunary;
using testutil::Q;
using testutil::Qs;

namespace {

const char* kGrid[] = {"-3/2", "-1", "-1/2", "0", "1/2", "1", "2"};

class Identities : public ::testing::Test {
protected:
    static void SetUpTestSuite() { set_working_digits(50); }
};

} // namespace

TEST(RatFun, QuotientRuleExamples)
{
    const RationalFunction1D f{Poly1({Q("1")}), Poly1(Qs({"1", "1"}))};
    const auto d = ratfun_derivative(f, 1);
    for (const char* t : {"0", "1/2", "3"}) {
        EXPECT_EQ(d.evaluate(Q(t)), -1 / pow(1 + Q(t), 2));
    }
    const RationalFunction1D c{Poly1({Q("5")}), Poly1(Qs({"2", "1"}))};
    EXPECT_EQ(ratfun_derivative({Poly1({Q("5")}), Poly1({Q("2")})}, 2).evaluate(Q("1")), 0);
    const RationalFunction1D u{Poly1({Q("1")}), Poly1(Qs({"1", "1", "1"}))};
    EXPECT_EQ(ratfun_derivative(u, 1).evaluate(Q("0")), -1);
    EXPECT_THROW(f.evaluate(Q("-1")), DomainError);
}

TEST(RatFun, AgreesWithSeriesDifferentiation)
{
    // m-th derivative at 0 equals m! times the m-th series coefficient.
    const Poly1 num(Qs({"2", "-1", "3"}));
    const Poly1 den(Qs({"1", "1/2", "-2", "1"}));
    const RationalFunction1D f{num, den};
    const auto series = TruncatedSeries::from_poly(num, 8) * series_reciprocal(TruncatedSeries::from_poly(den, 8));
    for (unsigned m = 0; m <= 6; ++m) {
        EXPECT_EQ(ratfun_derivative(f, m).evaluate(Q("0")), factorial(m) * series[m]) << m;
    }
}

TEST(Taylor, ShiftAndExponent)
{
    const Poly1 p(Qs({"1", "2", "3"}));
    EXPECT_EQ(taylor_shift(p, Q("1")), Poly1(Qs({"6", "8", "3"})));
    EXPECT_EQ(lacunary_exponent(Q("2"), Q("5"), 3), Poly1(Qs({"0", "2", "0", "5"})));
}

TEST_F(Identities, RodriguezChebyshevExamples)
{
    const auto r1 = verify_rodriguez_chebyshev(1, Q("1"), Q("1"), Q("0"));
    EXPECT_TRUE(r1.passed());
    EXPECT_EQ(r1.details[0].values[0].second, "-1");
    const auto r2 = verify_rodriguez_chebyshev(2, Q("1"), Q("1"), Q("0"));
    EXPECT_EQ(r2.details[0].values[0].second, "0");
    EXPECT_TRUE(verify_rodriguez_chebyshev(0, Q("1"), Q("1"), Q("1/2")).passed());
    EXPECT_THROW(verify_rodriguez_chebyshev(1, Q("0"), Q("-1"), Q("1")), DomainError);
}

TEST_F(Identities, RodriguezChebyshevOnGrid)
{
    for (unsigned m = 0; m <= 6; ++m) {
        for (const char* x : kGrid) {
            for (const char* t : {"-1", "1/2", "2"}) {
                const Rational y = Q("1/2");
                if (1 + Q(x) * Q(t) + y * Q(t) * Q(t) == 0) {
                    continue;
                }
                EXPECT_TRUE(verify_rodriguez_chebyshev(m, Q(x), y, Q(t)).passed()) << m << " " << x << " " << t;
            }
        }
    }
}

TEST_F(Identities, RodriguezHermite)
{
    for (unsigned n : {2u, 3u}) {
        for (unsigned m = 0; m <= 6; ++m) {
            EXPECT_TRUE(verify_rodriguez_hermite(m, n, Q("1"), Q("1"), Q("0")).passed());
            EXPECT_TRUE(verify_rodriguez_hermite(m, n, Q("-3/2"), Q("2"), Q("1/2")).passed());
        }
    }
    const auto r = verify_rodriguez_hermite(2, 2, Q("1"), Q("1"), Q("0"), 12);
    EXPECT_EQ(r.details.size(), 11u);
    EXPECT_THROW(verify_rodriguez_hermite(1, 1, Q("1"), Q("1"), Q("0")), UsageError);
}

TEST_F(Identities, RodriguezLegendreExamples)
{
    const auto r1 = verify_rodriguez_legendre(1, Q("1"), Q("1"), Q("0"));
    EXPECT_TRUE(r1.passed());
    EXPECT_EQ(r1.details[0].values[1].second, "-1/2");
    const auto r2 = verify_rodriguez_legendre(2, Q("1"), Q("1"), Q("0"));
    EXPECT_TRUE(r2.passed());
    EXPECT_EQ(r2.details[0].values[1].second, "-1/4");
    EXPECT_TRUE(verify_rodriguez_legendre(0, Q("2"), Q("1"), Q("1")).passed());
    for (unsigned m = 0; m <= 4; ++m) {
        EXPECT_TRUE(verify_rodriguez_legendre(m, Q("-1/2"), Q("2"), Q("1/2")).passed());
    }
    EXPECT_THROW(verify_rodriguez_legendre(1, Q("-2"), Q("0"), Q("1")), DomainError);
}

TEST_F(Identities, RodriguezLegendreLacunary)
{
    const auto r = verify_rodriguez_legendre_lacunary(1, 3, Q("1"), Q("1"), Q("0"));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.details[0].values[0].second, "-1/2");
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned m : {2u, 3u, 4u}) {
            EXPECT_TRUE(verify_rodriguez_legendre_lacunary(n, m, Q("1/2"), Q("-1/2"), Q("1")).passed());
        }
        EXPECT_EQ(verify_rodriguez_legendre_lacunary(n, 2, Q("1"), Q("2"), Q("1/2")).details[0].values,
                  verify_rodriguez_legendre(n, Q("1"), Q("2"), Q("1/2")).details[0].values);
    }
    EXPECT_THROW(verify_rodriguez_legendre_lacunary(1, 1, Q("1"), Q("1"), Q("0")), UsageError);
}

TEST_F(Identities, ShiftedGeneratingFunctions)
{
    EXPECT_TRUE(verify_shifted_genfun_hermite(1, Q("1"), Q("1"), 10).passed());
    EXPECT_TRUE(verify_shifted_genfun_hermite(3, Q("2"), Q("-1"), 10).passed());
    EXPECT_TRUE(verify_shifted_genfun_chebyshev(1, Q("1"), Q("1"), 8).passed());
    EXPECT_TRUE(verify_shifted_genfun_chebyshev(2, Q("1/2"), Q("-1"), 8).passed());
    EXPECT_EQ(verify_shifted_genfun_hermite(0, Q("1"), Q("1"), 10).details.size(), 11u);
}

TEST_F(Identities, RainvilleLacunary)
{
    for (unsigned l = 0; l <= 3; ++l) {
        for (unsigned m : {2u, 3u}) {
            const auto r = verify_rainville_lacunary(l, m, Q("1"), Q("1"), 9);
            EXPECT_TRUE(r.passed()) << l << " " << m << " " << r.note;
            EXPECT_EQ(r.details.size(), 20u);
        }
    }
    EXPECT_THROW(verify_rainville_lacunary(1, 1, Q("1"), Q("1"), 9), UsageError);
}

TEST_F(Identities, ScalingTheorems)
{
    const auto c = legendre_scaling_classical(2, Q("2"), Q("1"));
    EXPECT_TRUE(c.passed());
    EXPECT_EQ(c.details[0].values[0].second, "11/2");
    for (unsigned n = 0; n <= 12; ++n) {
        for (const char* lam : {"1/2", "2", "-3/2", "1"}) {
            EXPECT_TRUE(legendre_scaling_classical(n, Q(lam), Q("-1/2")).passed());
            EXPECT_TRUE(legendre_scaling_2var(n, Q(lam), Q("1"), Q("1")).passed());
            EXPECT_TRUE(gegenbauer_scaling(n, Q("1"), Q(lam), Q("1")).passed());
            EXPECT_TRUE(gegenbauer_scaling(n, Q("1/2"), Q(lam), Q("2")).passed());
        }
    }
    EXPECT_THROW(legendre_scaling_2var(2, Q("0"), Q("1"), Q("1")), DomainError);
    EXPECT_THROW(gegenbauer_scaling(2, Q("1"), Q("0"), Q("1")), DomainError);
    EXPECT_THROW(gegenbauer_scaling(2, Q("0"), Q("2"), Q("1")), DomainError);
}

TEST_F(Identities, HermiteProperties)
{
    for (unsigned n = 0; n <= 12; ++n) {
        EXPECT_TRUE(verify_hermite_dilatation(n, Q("-2"), Q("1/2"), Q("-1")).passed());
        EXPECT_TRUE(verify_hermite_multiplication(n, Q("-3"), Q("2"), Q("1/2")).passed());
        EXPECT_TRUE(verify_heat_operator(n, Q("-3/2")).passed());
        EXPECT_TRUE(verify_hermite_recurrence(n, Q("1"), Q("2")).passed());
        for (unsigned r = 0; r <= n; ++r) {
            EXPECT_TRUE(verify_hermite_repeated_derivative(n, r).passed());
        }
    }
    EXPECT_THROW(verify_hermite_repeated_derivative(2, 3), UsageError);
}

TEST_F(Identities, OperationalLegendre)
{
    const auto r = dilation_gamma_operator(2, Q("1"), Q("1"));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.details.back().values[0].second, "-1/8");
    for (unsigned n = 0; n <= 16; ++n) {
        EXPECT_TRUE(dilation_gamma_operator(n, Q("-3/2"), Q("1/2")).passed());
    }
}

TEST_F(Identities, AsymptoticHermiteMatchesMpmath)
{
    const auto r = asymptotic_hermite(Q("1"), Q("1"), {8, 16, 32, 64});
    EXPECT_TRUE(r.passed());
    const double expected[] = {0.23002993225238469818, 0.14163117500850847469, 0.08048680713172438254,
                               0.043273041554873889907};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::stod(r.details[i].values[0].second), expected[i], 1e-15);
    }
    const auto r2 = asymptotic_hermite(Q("2"), Q("1"), {8, 16, 32, 64});
    EXPECT_TRUE(r2.passed());
    EXPECT_NEAR(std::stod(r2.details[3].values[0].second), 0.0057438833787081889159, 1e-15);
    const auto zero = asymptotic_hermite(Q("3"), Q("0"), {8, 16});
    EXPECT_TRUE(zero.passed());
    EXPECT_EQ(zero.max_abs_deviation, 0.0);
    EXPECT_THROW(asymptotic_hermite(Q("0"), Q("1"), {8}), DomainError);
}

TEST_F(Identities, AsymptoticHermiteFlagsNonDecreasingSequences)
{
    EXPECT_FALSE(asymptotic_hermite(Q("1"), Q("1"), {16, 8}).passed());
}

TEST_F(Identities, AsymptoticLegendreMatchesMpmath)
{
    const auto r = asymptotic_legendre(Q("1"), Q("1"), {8, 16, 32});
    EXPECT_TRUE(r.passed());
    const double expected[] = {0.012732798433082450189, 0.0035465470802459106454, 0.00093134168032006991928};
    // 80-node rule: the integrand is flat but not analytic at s = 0
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(std::stod(r.details[i].values[0].second), expected[i], 1e-9 * expected[i]);
    }
    const auto fine = asymptotic_legendre(Q("1"), Q("1"), {8}, 160);
    EXPECT_NEAR(std::stod(fine.details[0].values[0].second), expected[0], 1e-11 * expected[0]);
    const auto r2 = asymptotic_legendre(Q("2"), Q("1"), {8, 16, 32});
    EXPECT_TRUE(r2.passed());
    EXPECT_NEAR(std::stod(r2.details[1].values[0].second), 0.00097789096389272754977, 1e-9 * 0.00097789096389272754977);
    const auto zero = asymptotic_legendre(Q("1"), Q("0"), {8, 16, 32});
    EXPECT_TRUE(zero.passed());
    EXPECT_EQ(zero.max_abs_deviation, 0.0);
    EXPECT_THROW(asymptotic_legendre(Q("1"), Q("-1"), {8}), DomainError);
    EXPECT_THROW(asymptotic_legendre(Q("0"), Q("1"), {8}), DomainError);
}

TEST_F(Identities, AsymptoticGegenbauer)
{
    const auto gs = Qs({"10", "100", "1000"});
    const auto n1 = asymptotic_gegenbauer(Q("1"), 1, gs);
    EXPECT_TRUE(n1.passed());
    EXPECT_EQ(n1.max_abs_deviation, 0.0);
    const auto n2 = asymptotic_gegenbauer(Q("1"), 2, gs);
    EXPECT_TRUE(n2.passed());
    // g^-1 C_2(1/sqrt g) = 2 (g+1)/g - 1 = 1 + 2/g, limit H_2(2,-1)/2 = 1.
    EXPECT_EQ(n2.details[0].values[2].second, "1/5");
    EXPECT_EQ(n2.details[2].values[2].second, "1/500");
    EXPECT_TRUE(asymptotic_gegenbauer(Q("1"), 3, gs).passed());
    const auto x0 = asymptotic_gegenbauer(Q("0"), 2, gs);
    EXPECT_EQ(x0.max_abs_deviation, 0.0);
    EXPECT_EQ(x0.details[0].values[0].second, "-1");
    EXPECT_THROW(asymptotic_gegenbauer(Q("1"), 2, Qs({"10", "-1"})), DomainError);
    EXPECT_THROW(asymptotic_gegenbauer(Q("1"), 2, Qs({"100", "10"})), UsageError);
}
