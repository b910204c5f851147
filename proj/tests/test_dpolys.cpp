#include <gtest/gtest.h>

#include <lnd/dpolys.hpp>
#include <lnd/oracle.hpp>

using lnd::LegendreSeries;
using lnd::Rational;

namespace {

std::vector<Rational> fractions(std::initializer_list<const char*> ascending)
{
    std::vector<Rational> out;
    for (const char* c : ascending)
        out.push_back(Rational::parse(c));
    return out;
}

} // namespace

TEST(RPoly, LowDegrees)
{
    EXPECT_TRUE(lnd::r_poly(0).is_zero());
    EXPECT_EQ(lnd::r_poly(1), (LegendreSeries{Rational(-1), Rational(1)}));
    EXPECT_EQ(lnd::r_poly(2), (LegendreSeries{Rational(1, 3), Rational(-3, 2), Rational(7, 6)}));
    EXPECT_THROW(lnd::r_poly(-1), lnd::DomainError);
}

TEST(BPoly, LowDegrees)
{
    EXPECT_TRUE(lnd::b_poly(0).is_zero());
    EXPECT_EQ(lnd::b_poly(1), (LegendreSeries{Rational(2), Rational(2)}));
    EXPECT_EQ(lnd::b_poly(2), (LegendreSeries{Rational(2, 3), Rational(3), Rational(7, 3)}));
    EXPECT_EQ(lnd::to_monomial(lnd::b_poly(2)), fractions({"-1/2", "3", "7/2"}));
    EXPECT_EQ(lnd::to_monomial(lnd::b_poly(3)), fractions({"-4/3", "-5/2", "5", "37/6"}));
}

TEST(CPoly, LowDegrees)
{
    EXPECT_TRUE(lnd::c_poly(0).is_zero());
    EXPECT_EQ(lnd::c_poly(1), (LegendreSeries{Rational(2), Rational(-2)}));
    EXPECT_EQ(lnd::to_monomial(lnd::c_poly(2)), fractions({"1/4", "5/2", "-11/4"}));
    EXPECT_EQ(lnd::to_monomial(lnd::c_poly(3)), fractions({"-10/9", "19/12", "23/6", "-155/36"}));
}

TEST(CCoeff, Examples)
{
    EXPECT_EQ(lnd::c_coeff(1, 0), Rational(2));
    EXPECT_EQ(lnd::c_coeff(2, 1), lnd::oracle::c_coeff_direct(2, 1));
    EXPECT_EQ(lnd::c_coeff(5, 4), lnd::oracle::c_coeff_direct(5, 4));
    EXPECT_THROW(lnd::c_coeff(3, 3), lnd::DomainError);
    EXPECT_THROW(lnd::c_coeff(3, -1), lnd::DomainError);
    EXPECT_THROW(lnd::c_coeff(0, 0), lnd::DomainError);
}

TEST(CCoeff, MatchesDirectSummationIncludingTopEdge)
{
    for (long n = 1; n <= 60; ++n)
        for (long k = 0; k < n; ++k)
            ASSERT_EQ(lnd::c_coeff(n, k), lnd::oracle::c_coeff_direct(n, k)) << n << "," << k;
}

TEST(CnnCoeff, ExamplesAndRoutes)
{
    EXPECT_EQ(lnd::c_nn_coeff(0), Rational(0));
    EXPECT_EQ(lnd::c_nn_coeff(1), Rational(-2));
    EXPECT_EQ(lnd::c_nn_coeff(3), lnd::c_poly(3).coeff(3));
    for (long n = 0; n <= 200; ++n) {
        const Rational v = lnd::c_nn_coeff(n);
        ASSERT_EQ(v, lnd::c_nn_by_summation(n));
        ASSERT_NEAR(v.to_double(), lnd::c_nn_closed_form_double(n), 1e-12);
    }
}

TEST(CPoly, TwoFormsAgree)
{
    for (long n = 0; n <= 200; n += (n < 40 ? 1 : 7))
        ASSERT_EQ(lnd::c_poly(n), lnd::c_poly_telescoped(n)) << n;
}

TEST(CoeffTriple, InvariantsHold)
{
    const auto t0 = lnd::coeff_triple(0);
    EXPECT_TRUE(t0.r.is_zero() && t0.b.is_zero() && t0.c.is_zero());
    const auto t1 = lnd::coeff_triple(1);
    EXPECT_EQ(t1.r, (LegendreSeries{Rational(-1), Rational(1)}));
    EXPECT_EQ(t1.b, (LegendreSeries{Rational(2), Rational(2)}));
    EXPECT_EQ(t1.c, (LegendreSeries{Rational(2), Rational(-2)}));
    for (long n = 0; n <= 200; n += (n < 30 ? 1 : 11)) {
        const auto t = lnd::coeff_triple(n);
        ASSERT_EQ(t.degree, n);
        if (n > 0) {
            ASSERT_EQ(t.r.degree(), n);
            ASSERT_EQ(t.b.degree(), n);
            ASSERT_EQ(t.c.degree(), n);
        }
        ASSERT_TRUE(t.r.at_plus_one().is_zero());
        ASSERT_TRUE(t.b.at_minus_one().is_zero());
        ASSERT_TRUE(t.c.at_plus_one().is_zero());
        ASSERT_EQ(t.b, lnd::parity_flip(t.r) * Rational(2 * lnd::sign_pow(n)));
    }
}

TEST(CoeffTriple, CheckRejectsCorruptedTriples)
{
    auto t = lnd::coeff_triple(4);
    t.c += LegendreSeries{Rational(1, 1000)};
    EXPECT_THROW(lnd::check_triple(t), lnd::InternalInconsistency);
    auto u = lnd::coeff_triple(4);
    u.b = u.b * Rational(2);
    EXPECT_THROW(lnd::check_triple(u), lnd::InternalInconsistency);
    auto v = lnd::coeff_triple(0);
    v.r = LegendreSeries{Rational(1)};
    EXPECT_THROW(lnd::check_triple(v), lnd::InternalInconsistency);
}

TEST(DifferentialIdentities, ExactForLowAndModerateDegrees)
{
    for (long n = 0; n <= 100; n += (n < 30 ? 1 : 9)) {
        const auto pn = LegendreSeries::basis(static_cast<std::size_t>(n));
        const auto r = lnd::r_poly(n), b = lnd::b_poly(n), c = lnd::c_poly(n);
        ASSERT_EQ(lnd::legendre_operator(r, n), Rational(2) * (lnd::zminus1_dz(n) - pn * Rational(n)));
        ASSERT_EQ(lnd::legendre_operator(b, n), Rational(4) * (lnd::zplus1_dz(n) - pn * Rational(n)));
        ASSERT_EQ(lnd::legendre_operator(c, n),
                  Rational(2) * lnd::zminus1_dz(b) + b - r * Rational(2 * (2 * n + 1)));
    }
}
