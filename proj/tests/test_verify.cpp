#include <gtest/gtest.h>

#include <lnd/verify.hpp>

namespace verify = lnd::verify;

namespace {

void expect_all_pass(const verify::Report& r)
{
    EXPECT_FALSE(r.cases.empty());
    for (const auto& c : r.cases)
        EXPECT_TRUE(c.pass) << r.suite << ": " << c.identity << " " << c.index
                            << (c.residual ? " residual " + std::to_string(*c.residual) : std::string(" exact"));
}

} // namespace

TEST(Verify, LowDegreeSuiteIsExact)
{
    const auto r = verify::lown();
    expect_all_pass(r);
    for (const auto& c : r.cases)
        EXPECT_FALSE(c.residual.has_value());
    const auto j = verify::to_json(r);
    EXPECT_EQ(j["summary"]["failed"], 0);
    EXPECT_EQ(j["summary"]["total"], r.cases.size());
    EXPECT_EQ(j["cases"][0]["residual"], "exact");
}

TEST(Verify, SumsSuiteSmall)
{
    verify::Options opt;
    opt.n_max = 30;
    expect_all_pass(verify::sums(opt));
}

TEST(Verify, OdeSuiteSmall)
{
    verify::Options opt;
    opt.n_max = 25;
    expect_all_pass(verify::ode(opt));
}

TEST(Verify, RecurrenceSuite) { expect_all_pass(verify::recurrence()); }

TEST(Verify, OracleSuiteLowDegrees)
{
    verify::Options opt;
    opt.n_max = 2;
    expect_all_pass(verify::oracle_suite(opt));
}

TEST(Verify, FailuresAreReported)
{
    verify::Options opt;
    opt.n_max = 3;
    opt.tol = 1e-300;
    const auto r = verify::recurrence(opt);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(verify::to_json(r)["summary"]["failed"], r.failed());
    EXPECT_EQ(r.passed() + r.failed(), r.cases.size());
}

TEST(Verify, DeterministicForSeed)
{
    verify::Options opt;
    opt.n_max = 4;
    opt.seed = 1234;
    EXPECT_EQ(verify::to_json(verify::recurrence(opt)).dump(), verify::to_json(verify::recurrence(opt)).dump());
    EXPECT_EQ(verify::recurrence_points(5, 10), verify::recurrence_points(5, 10));
    EXPECT_NE(verify::recurrence_points(5, 10), verify::recurrence_points(6, 10));
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(verify::run("nope"), lnd::DomainError); }
