#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include <lnd/harmonic.hpp>
#include <lnd/rational.hpp>

using lnd::Rational;

namespace {

bool canonical(const Rational& r)
{
    const mpq_class& q = r.raw();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q.get_den() > 0 && g == 1;
}

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(Rational::parse("-155/36").str(), "-155/36");
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational(4, -8).str(), "-1/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational::from_parts("10", "-4"), Rational(-5, 2));
}

TEST(Rational, RejectsZeroDenominator)
{
    EXPECT_THROW(Rational(1, 0), lnd::DomainError);
    EXPECT_THROW(Rational(1) / Rational(0), lnd::DomainError);
    EXPECT_THROW(Rational::parse("3/0"), lnd::DomainError);
    EXPECT_THROW(Rational::parse("abc"), lnd::DomainError);
}

TEST(Rational, OrderingAndSign)
{
    EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
    EXPECT_GT(Rational(7, 6), Rational(1));
    EXPECT_EQ(Rational(-2, 3).sign(), -1);
    EXPECT_TRUE(Rational(0).is_zero());
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_EQ(lnd::sign_pow(3), -1);
    EXPECT_EQ(lnd::sign_pow(-2), 1);
}

TEST(Rational, ToDoubleIsCorrectlyRounded)
{
    EXPECT_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
    EXPECT_EQ(Rational(-155, 36).to_double(), -155.0 / 36.0);
    EXPECT_EQ(Rational(1, 10).to_double(), 0.1);
    EXPECT_EQ(Rational(0).to_double(), 0.0);
    // Huge numerator and denominator whose quotient is an ordinary number.
    const Rational big(mpq_class(mpz_class("100000000000000000000000000000001"),
                                 mpz_class("300000000000000000000000000000000")));
    EXPECT_EQ(big.to_double(), 1.0 / 3.0);
}

TEST(Rational, RandomArithmeticStaysCanonical)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 997);
    Rational acc(1);
    for (int i = 0; i < 2000; ++i) {
        const Rational x(num(rng), den(rng));
        switch (i % 4) {
        case 0: acc += x; break;
        case 1: acc -= x; break;
        case 2: acc *= x; break;
        default:
            if (!x.is_zero())
                acc /= x;
        }
        ASSERT_TRUE(canonical(acc)) << "step " << i;
        if (mpz_sizeinbase(acc.raw().get_num().get_mpz_t(), 2) > 4096)
            acc = Rational(1, 7);
    }
}

TEST(Harmonic, Examples)
{
    EXPECT_EQ(lnd::harmonic(0), Rational(0));
    EXPECT_EQ(lnd::harmonic(2), Rational(3, 2));
    EXPECT_EQ(lnd::harmonic(4), Rational(25, 12));
    EXPECT_EQ(lnd::harmonic2(0), Rational(0));
    EXPECT_EQ(lnd::harmonic2(2), Rational(5, 4));
    EXPECT_EQ(lnd::harmonic2(3), Rational(49, 36));
    EXPECT_THROW(lnd::harmonic(-1), lnd::DomainError);
    EXPECT_THROW(lnd::harmonic2(-3), lnd::DomainError);
}

TEST(Harmonic, Increments)
{
    for (long n = 1; n <= 300; ++n) {
        ASSERT_EQ(lnd::harmonic(n) - lnd::harmonic(n - 1), Rational(1, n));
        ASSERT_EQ(lnd::harmonic2(n) - lnd::harmonic2(n - 1), Rational(1, n * n));
    }
}

TEST(Harmonic, PsiDiff)
{
    EXPECT_EQ(lnd::psi_diff(3, 2), Rational(1, 2));
    EXPECT_EQ(lnd::psi_diff(5, 3), Rational(7, 12));
    EXPECT_EQ(lnd::psi_diff(7, 7), Rational(0));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> arg(1, 400);
    for (int i = 0; i < 200; ++i) {
        const long a = arg(rng), b = arg(rng);
        ASSERT_EQ(lnd::psi_diff(a, b), -lnd::psi_diff(b, a));
        ASSERT_EQ(lnd::trigamma_diff(a, b), -lnd::trigamma_diff(b, a));
    }
    EXPECT_EQ(lnd::trigamma_diff(3, 1), -Rational(5, 4));
    EXPECT_THROW(lnd::psi_diff(0, 2), lnd::DomainError);
}

TEST(Harmonic, AlternatingSum)
{
    EXPECT_EQ(lnd::alt_harmonic(0), Rational(0));
    EXPECT_EQ(lnd::alt_harmonic(2), Rational(-1, 2));
    EXPECT_EQ(lnd::alt_harmonic(4), Rational(-7, 12));
    Rational direct(0);
    for (long n = 1; n <= 500; ++n) {
        direct += Rational(lnd::sign_pow(n), n);
        ASSERT_EQ(lnd::alt_harmonic(n), direct) << n;
        ASSERT_EQ(direct, lnd::harmonic(n / 2) - lnd::harmonic(n));
    }
}

TEST(Harmonic, CacheGrowsMonotonicallyUnderConcurrency)
{
    lnd::HarmonicCache cache;
    std::vector<std::thread> workers;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] { results[t] = cache.h1(100 + 37 * t); });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 8; ++t)
        EXPECT_EQ(results[t], lnd::harmonic(100 + 37 * t));
    EXPECT_GE(cache.size(), 100u + 37u * 7u + 1u);
    const auto before = cache.size();
    cache.ensure(10);
    EXPECT_EQ(cache.size(), before);
}
