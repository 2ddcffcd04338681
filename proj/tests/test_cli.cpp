#include "lacunary/cli.hpp"
#include "lacunary/serialize.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace lacunary;
using testutil::Q;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST(Cli, CoeffsLegendre2)
{
    const auto r = cli({"coeffs", "legendre2", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3/8 x^2 - 1/2 y\n");
}

TEST(Cli, CoeffsJsonAndCsv)
{
    const auto j = cli({"coeffs", "hermite-multivar", "--n", "3", "--p", "3", "--format", "json"});
    ASSERT_EQ(j.code, 0) << j.err;
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["polynomial"], "x1^3 + 6 x1 x2 + 6 x3");
    EXPECT_EQ(doc["terms"].size(), 3u);
    const auto c = cli({"coeffs", "gegenbauer", "--n", "2", "--gamma", "1", "--format", "csv"});
    EXPECT_EQ(c.out, "exponents,coefficient\n2,4\n0,-1\n");
}

TEST(Cli, EvalHumbert)
{
    const auto r = cli({"eval", "humbert", "--n", "3", "--m", "3", "--x", "1", "--y", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "-2");
    EXPECT_NE(r.out.find("-2.0000000000"), std::string::npos);
}

TEST(Cli, EvalJsonRoundTripsRationals)
{
    const auto r = cli({"eval", "legendre2", "--n", "5", "--x", "-3/2", "--y", "1/2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(rational_from_json(doc["exact"]), Q("3069/8192"));
    EXPECT_EQ(rational_from_json(doc["args"]["x"]), Q("-3/2"));
    EXPECT_EQ(doc["value"]["precision"], 50);
}

TEST(Cli, DigitsFlagAndEnvironment)
{
    const auto r = cli({"--digits", "35", "eval", "legendre", "--n", "1", "--x", "1/3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"]["precision"], 35);
    EXPECT_EQ(cli({"--digits", "10", "eval", "legendre", "--n", "1", "--x", "1"}).code, kExitUsage);
    set_working_digits(50);
}

TEST(Cli, VerifyRodriguezChebyshevPasses)
{
    const auto r = cli({"verify", "rodriguez-chebyshev", "--m", "0..6", "--grid", "small", "--jobs", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("summary: 2296 checks, 0 failed"), std::string::npos);
}

TEST(Cli, VerifyOutputIsDeterministicAcrossJobCounts)
{
    const auto a = cli({"verify", "rainville", "--l", "0..1", "--format", "json", "--jobs", "1"});
    const auto b = cli({"verify", "rainville", "--l", "0..1", "--format", "json", "--jobs", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto doc = nlohmann::json::parse(a.out);
    ASSERT_TRUE(doc.is_array());
    for (const char* key : {"identity", "params", "status", "deviation", "details"}) {
        EXPECT_TRUE(doc[0].contains(key)) << key;
    }
}

TEST(Cli, VerifyCsvColumns)
{
    const auto r = cli({"verify", "scaling-legendre", "--n", "2", "--grid", "0,1", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "name,params,status,deviation");
    EXPECT_NE(r.out.find("scaling-legendre,n=2;lambda=-3/2;x=0,pass,0.000000e+00"), std::string::npos);
}

TEST(Cli, TableSweepsTheGrid)
{
    const auto r = cli({"table", "chebyshev-u2", "--n", "0..2", "--grid", "1,2", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    // header + 3 degrees x 4 grid points
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 13);
    EXPECT_NE(r.out.find("chebyshev-u2,2,\"1,1\",0,"), std::string::npos);
}

TEST(Cli, AsymptoticDefaultsPass)
{
    const auto r = cli({"asymptotic", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc.size(), 3u);
    EXPECT_EQ(doc[0]["identity"], "asymptotic-hermite");
}

TEST(Cli, AsymptoticDomainErrorIsRecorded)
{
    const auto r = cli({"asymptotic", "--y", "-1"});
    EXPECT_EQ(r.code, kExitCheckFailed);
    EXPECT_NE(r.out.find("fail  asymptotic-legendre"), std::string::npos);
}

TEST(Cli, OutputFile)
{
    const std::string path = ::testing::TempDir() + "lacunary_cli_out.txt";
    const auto r = cli({"coeffs", "hermite2", "--n", "3", "--output", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x^3 + 6 x y");
    std::remove(path.c_str());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"coeffs", "nonexistent", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(cli({"coeffs", "legendre2"}).code, kExitUsage);
    EXPECT_EQ(cli({"eval", "legendre2", "--n", "2", "--x", "1/0", "--y", "1"}).code, kExitUsage);
    EXPECT_EQ(cli({"eval", "humbert", "--n", "2", "--x", "1", "--y", "1"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "genfun", "--n", "5..2"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "nope"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "genfun", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, DomainErrorsExitNonzero)
{
    const auto r = cli({"eval", "gegenbauer", "--n", "2", "--gamma", "-1", "--x", "1"});
    EXPECT_EQ(r.code, kExitDomain);
    EXPECT_NE(r.err.find("positive"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly)
{
    const auto r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
