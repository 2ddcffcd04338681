#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lacunary;
using testutil::Q;
using testutil::Qs;

namespace {

TruncatedSeries S(std::initializer_list<const char*> c)
{
    return TruncatedSeries(Qs(c));
}

TruncatedSeries padded(std::vector<Rational> c, std::size_t order)
{
    c.resize(order + 1, Rational(0));
    return TruncatedSeries(std::move(c));
}

// Unit-constant series with small random rational coefficients.
TruncatedSeries random_unit_series(std::mt19937& rng, std::size_t order)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<Rational> c{Rational(1)};
    for (std::size_t k = 1; k <= order; ++k) {
        c.push_back(Rational(num(rng), den(rng)));
    }
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST(Fps, AddAndMultiplyExamples)
{
    EXPECT_EQ(S({"1", "1"}) + S({"1", "-1"}), S({"2", "0"}));
    EXPECT_EQ(S({"1", "0", "2"}) + S({"0", "3", "0"}), S({"1", "3", "2"}));
    EXPECT_EQ(S({"1", "1", "0"}) * S({"1", "-1", "0"}), S({"1", "0", "-1"}));
    EXPECT_EQ(S({"0", "1"}) * S({"0", "1"}), S({"0", "0"}));
    EXPECT_THROW(S({"1", "1"}) + S({"1"}), UsageError);
    EXPECT_THROW(S({"1", "1"}) * S({"1"}), UsageError);
    EXPECT_THROW(TruncatedSeries(std::vector<Rational>{}), UsageError);
}

TEST(Fps, ReciprocalMatchesLongDivision)
{
    // 1/(1+t+t^2) = (1-t)/(1-t^3): period 1, -1, 0.
    const auto r = series_reciprocal(TruncatedSeries::from_poly(Poly1(Qs({"1", "1", "1"})), 9));
    EXPECT_EQ(r, S({"1", "-1", "0", "1", "-1", "0", "1", "-1", "0", "1"}));
    EXPECT_EQ(series_reciprocal(S({"1"})), S({"1"}));
    EXPECT_THROW(series_reciprocal(S({"0", "1"})), SingularSeriesError);
}

TEST(Fps, InvSqrtIsBinomialSeries)
{
    const auto r = series_inv_sqrt(S({"1", "1", "0", "0", "0", "0", "0", "0", "0"}));
    EXPECT_EQ(r, S({"1", "-1/2", "3/8", "-5/16", "35/128", "-63/256", "231/1024", "-429/2048", "6435/32768"}));
    EXPECT_THROW(series_inv_sqrt(S({"4", "1"})), UnsupportedNormalizationError);
    EXPECT_THROW(series_inv_sqrt(S({"0", "1"})), UnsupportedNormalizationError);
    EXPECT_EQ(series_inv_sqrt(S({"1", "0"})), S({"1", "0"}));
}

TEST(Fps, PowAndExp)
{
    EXPECT_EQ(series_pow(S({"1", "1", "0", "0", "0", "0"}), Q("1/3")), S({"1", "1/3", "-1/9", "5/81", "-10/243", "22/729"}));
    EXPECT_EQ(series_exp(S({"0", "1", "0", "0", "0", "0", "0"})), S({"1", "1", "1/2", "1/6", "1/24", "1/120", "1/720"}));
    EXPECT_THROW(series_exp(S({"1", "1"})), UnsupportedNormalizationError);
    EXPECT_THROW(series_pow(S({"2", "1"}), Q("1/2")), UnsupportedNormalizationError);
}

TEST(Fps, CoefficientAndDerivative)
{
    const auto a = S({"1", "2", "3", "4"});
    EXPECT_EQ(series_derivative(a, 1), S({"2", "6", "12"}));
    EXPECT_EQ(series_derivative(a, 3), S({"24"}));
    EXPECT_EQ(series_coefficient(a, 2), Q("3"));
    EXPECT_THROW(series_coefficient(a, 4), UsageError);
    EXPECT_EQ(series_truncate(a, 1), S({"1", "2"}));
}

TEST(Fps, GeneratingFunctionCoefficientExamples)
{
    const auto u = series_reciprocal(TruncatedSeries::from_poly(Poly1(Qs({"1", "1", "1"})), 4));
    EXPECT_EQ(series_coefficient(u, 2), 0);
    EXPECT_EQ(series_coefficient(u, 0), 1);
    const auto p = series_inv_sqrt(TruncatedSeries::from_poly(Poly1(Qs({"1", "1", "1"})), 4));
    EXPECT_EQ(series_coefficient(p, 1), Q("-1/2"));
}

TEST(Fps, ReciprocalAndInvSqrtInvariantsOnRandomSeries)
{
    std::mt19937 rng(20240611);
    const std::size_t order = 32;
    const auto one = padded({Rational(1)}, order);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_unit_series(rng, order);
        EXPECT_EQ(a * series_reciprocal(a), one);
        const auto s = series_inv_sqrt(a);
        EXPECT_EQ(s * s * a, one);
    }
}

TEST(Fps, ExpDerivativeRule)
{
    std::mt19937 rng(7);
    auto a = random_unit_series(rng, 20);
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    c[0] = 0;
    a = TruncatedSeries(c);
    const auto e = series_exp(a);
    EXPECT_EQ(series_derivative(e, 1), series_derivative(a, 1) * series_truncate(e, 19));
}

TEST(Fps, LiftAndScalarProduct)
{
    const auto a = S({"1", "1"});
    EXPECT_EQ(Q("1/2") * a, S({"1/2", "1/2"}));
    EXPECT_EQ(lift(Q("3"), a), S({"3", "0"}));
    EXPECT_EQ(TruncatedSeries::variable(2), S({"0", "1", "0"}));
}
