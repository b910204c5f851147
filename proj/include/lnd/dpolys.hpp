#ifndef LND_DPOLYS_HPP
#define LND_DPOLYS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "harmonic.hpp"
#include "legendre_series.hpp"
#include "rational.hpp"
#include "specfun.hpp"

namespace lnd {

// Coefficient polynomials of the degree derivatives, generated exactly:
//   dP/dnu   = P_n ln((z+1)/2) + R_n
//   d2P/dnu2 = -2 P_n Li2((1-z)/2) + B_n ln((z+1)/2) + C_n
// Every digamma/trigamma difference at integer arguments is reduced to
// harmonic numbers, so no transcendental constant enters generation.

namespace detail {
inline void require_degree(long n, const char* who)
{
    if (n < 0)
        throw DomainError(std::string(who) + ": degree must be non-negative");
}

/// (n-k)(n+k+1), the Legendre-operator eigenvalue gap.
inline long eigen_gap(long n, long k) { return (n - k) * (n + k + 1); }
} // namespace detail

inline LegendreSeries r_poly(long n)
{
    detail::require_degree(n, "r_poly");
    if (n == 0)
        return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[n] = Rational(2) * psi_diff(2 * n + 1, n + 1);
    for (long k = 0; k < n; ++k)
        c[k] = Rational(2 * sign_pow(n + k) * (2 * k + 1), detail::eigen_gap(n, k));
    return LegendreSeries(std::move(c));
}

inline LegendreSeries b_poly(long n)
{
    detail::require_degree(n, "b_poly");
    if (n == 0)
        return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[n] = Rational(4) * psi_diff(2 * n + 1, n + 1);
    for (long k = 0; k < n; ++k)
        c[k] = Rational(4 * (2 * k + 1), detail::eigen_gap(n, k));
    return LegendreSeries(std::move(c));
}

/// c_nk for 0 <= k < n.
inline Rational c_coeff(long n, long k)
{
    if (n < 1 || k < 0 || k >= n)
        throw DomainError("c_coeff: requires 0 <= k < n, got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k));
    const long gap = detail::eigen_gap(n, k);
    const long odd = 2 * k + 1;
    const int s = sign_pow(n + k);
    // psi(n+k+1) - psi(n-k+1) - psi(floor((n+k)/2)+1) + psi(floor((n-k)/2)+1)
    const Rational bracket =
        harmonic(n + k) - harmonic(n - k) - harmonic((n + k) / 2) + harmonic((n - k) / 2);
    const Rational gap_sq = Rational(gap) * Rational(gap);
    return Rational(8 * s * odd, gap) * bracket - Rational(4 * odd * odd) / gap_sq -
           Rational(4 * s * (2 * n + 1) * odd) / gap_sq;
}

/// The leading coefficient's closed form with the pi^2 and gamma terms taken
/// as doubles, exactly as it reads with digamma/trigamma.
inline double c_nn_closed_form_double(long n)
{
    detail::require_degree(n, "c_nn_closed_form_double");
    const double d = digamma_int(2 * n + 1) - digamma_int(n + 1);
    return -pi_squared / 3.0 + 4.0 * d * d + 4.0 * trigamma_int(2 * n + 1) -
           2.0 * trigamma_int(n + 1);
}

/// -sum_{k<n} c_nk.
inline Rational c_nn_by_summation(long n)
{
    detail::require_degree(n, "c_nn_by_summation");
    Rational sum(0);
    for (long k = 0; k < n; ++k)
        sum += c_coeff(n, k);
    return -sum;
}

/// c_nn = 4 (H_2n - H_n)^2 - 4 H_2n^(2) + 2 H_n^(2).
///
/// Cross-checked on every call against the summation route (exactly) and
/// the transcendental closed form (1e-12); a mismatch is an internal bug.
inline Rational c_nn_coeff(long n)
{
    detail::require_degree(n, "c_nn_coeff");
    const Rational d = harmonic(2 * n) - harmonic(n);
    Rational value = Rational(4) * d * d - Rational(4) * harmonic2(2 * n) + Rational(2) * harmonic2(n);
    if (value != c_nn_by_summation(n))
        throw InternalInconsistency("c_nn_coeff: rationalized value disagrees with -sum c_nk at n = " +
                                    std::to_string(n));
    if (std::abs(value.to_double() - c_nn_closed_form_double(n)) > 1e-12)
        throw InternalInconsistency("c_nn_coeff: rationalized value disagrees with closed form at n = " +
                                    std::to_string(n));
    return value;
}

/// C_n = c_nn P_n + sum_{k<n} c_nk P_k.
inline LegendreSeries c_poly(long n)
{
    detail::require_degree(n, "c_poly");
    if (n == 0)
        return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k < n; ++k)
        c[k] = c_coeff(n, k);
    c[n] = c_nn_coeff(n);
    return LegendreSeries(std::move(c));
}

/// C_n = sum_{k<n} c_nk (P_k - P_n), the form fixed by C_n(1) = 0.
inline LegendreSeries c_poly_telescoped(long n)
{
    detail::require_degree(n, "c_poly_telescoped");
    LegendreSeries out;
    for (long k = 0; k < n; ++k) {
        const Rational c = c_coeff(n, k);
        out += LegendreSeries::basis(static_cast<std::size_t>(k), c);
        out -= LegendreSeries::basis(static_cast<std::size_t>(n), c);
    }
    return out;
}

struct CoeffTriple {
    long degree = 0;
    LegendreSeries r;
    LegendreSeries b;
    LegendreSeries c;

    friend bool operator==(const CoeffTriple&, const CoeffTriple&) = default;
};

/// Checks the structural relations between R_n, B_n and C_n; throws
/// InternalInconsistency on the first violation.
inline void check_triple(const CoeffTriple& t)
{
    const long n = t.degree;
    auto fail = [n](const std::string& what) {
        throw InternalInconsistency("coeff_triple(" + std::to_string(n) + "): " + what);
    };
    if (n == 0) {
        if (!t.r.is_zero() || !t.b.is_zero() || !t.c.is_zero())
            fail("degree-0 polynomials must vanish");
        return;
    }
    if (t.r.degree() != n || t.b.degree() != n || t.c.degree() != n)
        fail("degree mismatch");
    LegendreSeries expected_b = parity_flip(t.r) * Rational(2 * sign_pow(n));
    if (t.b != expected_b)
        fail("B_n != 2 (-1)^n R_n(-z)");
    if (!t.r.at_plus_one().is_zero())
        fail("R_n(1) != 0");
    if (!t.b.at_minus_one().is_zero())
        fail("B_n(-1) != 0");
    if (!t.c.at_plus_one().is_zero())
        fail("C_n(1) != 0");
}

inline CoeffTriple coeff_triple(long n)
{
    detail::require_degree(n, "coeff_triple");
    CoeffTriple t{n, r_poly(n), b_poly(n), c_poly(n)};
    check_triple(t);
    return t;
}

} // namespace lnd

#endif // LND_DPOLYS_HPP
