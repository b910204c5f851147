#ifndef LND_ORACLE_HPP
#define LND_ORACLE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "harmonic.hpp"
#include "rational.hpp"
#include "specfun.hpp"

namespace lnd::oracle {

// Independent reference machinery. Nothing here reads the generated
// coefficient polynomials: P_nu comes from its hypergeometric series, Q_nu
// from P_nu, derivatives in nu from finite differences, and the summation
// identities from literal sums.

struct FDConfig {
    double step = 1e-3;
    int richardson_levels = 2;
    double tolerance = 1e-5;

    void validate() const
    {
        if (!(step >= 1e-5 && step <= 1e-1))
            throw DomainError("FDConfig: step must lie in [1e-5, 1e-1]");
        if (richardson_levels < 0 || richardson_levels > 4)
            throw DomainError("FDConfig: richardson_levels must lie in [0, 4]");
        if (!(tolerance > 0.0))
            throw DomainError("FDConfig: tolerance must be positive");
    }
};

namespace detail {
/// 2F1(-nu, nu+1; 1; w), stopped once three consecutive terms fall below
/// `tail` relative to the partial sum.
template <class R>
std::complex<R> hyp_series(R nu, std::complex<R> z, R tail)
{
    const std::complex<R> w = (R(1) - z) / R(2);
    if (!(std::abs(w) < R(1)))
        throw DomainError("p_nu_hyp: |1 - z|/2 must be < 1");
    constexpr int max_terms = 100000;
    std::complex<R> term(1);
    std::complex<R> sum = term;
    int quiet = 0;
    for (int k = 0; k < max_terms; ++k) {
        const R kk = static_cast<R>(k);
        term *= (kk - nu) * (kk + nu + R(1)) / ((kk + R(1)) * (kk + R(1))) * w;
        sum += term;
        if (std::abs(term) <= tail * std::abs(sum)) {
            if (++quiet == 3)
                return sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("p_nu_hyp: series did not converge within the term cap");
}
} // namespace detail

/// P_nu(z) = 2F1(-nu, nu+1; 1; (1-z)/2), summed directly inside |1-z| < 2.
inline Complex p_nu_hyp(double nu, Complex z) { return detail::hyp_series<double>(nu, z, 1e-15); }

/// The same series in long double, summed to the end of that precision.
/// Finite differences in nu amplify rounding and cutoff noise by 1/h or
/// 1/h^2, so the oracles below use this form.
inline ComplexExtended p_nu_hyp_extended(long double nu, ComplexExtended z)
{
    return detail::hyp_series<long double>(nu, z, std::numeric_limits<long double>::epsilon() / 4);
}

/// Q_nu(z) at nu = m + t, with the trigonometric factors reduced on t:
/// e^{-/+ i pi nu} = (-1)^m e^{-/+ i pi t} and sin(pi nu) = (-1)^m sin(pi t).
inline ComplexExtended q_nu_offset(long m, long double t, ComplexExtended z)
{
    if (std::abs(t) < 1e-6L)
        throw NearIntegerDegree("q_nu: nu within 1e-6 of an integer");
    if (z.imag() == 0.0L)
        throw DomainError("q_nu: z must be off the real axis");
    constexpr long double pi_l = std::numbers::pi_v<long double>;
    const long double nu = static_cast<long double>(m) + t;
    const long double sign = z.imag() > 0.0L ? -1.0L : 1.0L; // e^{-i pi nu} above, e^{+i pi nu} below
    const ComplexExtended phase = std::polar(1.0L, sign * pi_l * t);
    const ComplexExtended numer = phase * p_nu_hyp_extended(nu, z) - static_cast<long double>(sign_pow(m)) * p_nu_hyp_extended(nu, -z);
    return (pi_l / 2.0L) * numer / std::sin(pi_l * t);
}

/// Q_nu(z) from P_nu(+z) and P_nu(-z) for Im z != 0 and non-integer nu.
inline Complex q_nu(double nu, Complex z)
{
    const double m = std::round(nu);
    const ComplexExtended v = q_nu_offset(static_cast<long>(m), static_cast<long double>(nu - m),
                                          ComplexExtended(z.real(), z.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

namespace detail {
/// Richardson extrapolation of a central difference (error even in h).
template <class F>
Complex richardson_central(F&& diff, const FDConfig& cfg)
{
    cfg.validate();
    const int levels = cfg.richardson_levels;
    std::vector<std::vector<Complex>> t(levels + 1);
    double h = cfg.step;
    for (int i = 0; i <= levels; ++i, h /= 2.0) {
        t[i].push_back(diff(h));
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0)
            t[i].push_back(t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (factor - 1.0));
    }
    return t[levels][levels];
}
} // namespace detail

/// Central second difference of P_nu(z) in nu at nu = n.
inline Complex fd2_nu(long n, Complex z, const FDConfig& cfg = {})
{
    const long double nu = static_cast<long double>(n);
    const ComplexExtended w(z.real(), z.imag());
    const ComplexExtended centre = p_nu_hyp_extended(nu, w);
    return detail::richardson_central(
        [&](double h) {
            const long double hl = h;
            const ComplexExtended d =
                (p_nu_hyp_extended(nu + hl, w) - 2.0L * centre + p_nu_hyp_extended(nu - hl, w)) / (hl * hl);
            return Complex(static_cast<double>(d.real()), static_cast<double>(d.imag()));
        },
        cfg);
}

/// Central first difference of Q_nu(z) in nu at nu = n.
inline Complex fd1_q(long n, Complex z, const FDConfig& cfg = {})
{
    const ComplexExtended w(z.real(), z.imag());
    return detail::richardson_central(
        [&](double h) {
            const long double hl = h;
            const ComplexExtended d = (q_nu_offset(n, hl, w) - q_nu_offset(n, -hl, w)) / (2.0L * hl);
            return Complex(static_cast<double>(d.real()), static_cast<double>(d.imag()));
        },
        cfg);
}

/// Boundary-value average 0.5 [f(x + i eps) + f(x - i eps)] extrapolated to
/// eps -> 0 by Neville interpolation through the given eps values.
template <class F>
Complex boundary_average_limit(F&& f, double x, std::span<const double> eps)
{
    if (eps.empty())
        throw DomainError("boundary_average_limit: no eps values");
    std::vector<Complex> t;
    t.reserve(eps.size());
    for (const double e : eps)
        t.push_back(0.5 * (f(Complex(x, e)) + f(Complex(x, -e))));
    for (std::size_t level = 1; level < eps.size(); ++level)
        for (std::size_t i = eps.size() - 1; i >= level; --i)
            t[i] = (eps[i - level] * t[i] - eps[i] * t[i - 1]) / (eps[i - level] - eps[i]);
    return t.back();
}

// ---- Summation identities ---------------------------------------------------

namespace detail {
inline void require_s1_range(long n, long m)
{
    if (n < 1 || m < 0 || m > n - 1)
        throw DomainError("S1: requires 0 <= m <= n-1");
}
inline void require_positive(long n, const char* who)
{
    if (n < 1)
        throw DomainError(std::string(who) + ": requires n >= 1");
}
/// (2k+1) / ((n-k)(n+k+1))
inline Rational weight(long n, long k) { return Rational(2 * k + 1, (n - k) * (n + k + 1)); }
} // namespace detail

/// sum_{k=m}^{n-1} (-1)^{n+k} (2k+1)/((n-k)(n+k+1)), term by term.
inline Rational brute_S1(long n, long m)
{
    detail::require_s1_range(n, m);
    Rational sum(0);
    for (long k = m; k < n; ++k) {
        const Rational t = detail::weight(n, k);
        sum += (sign_pow(n + k) > 0) ? t : -t;
    }
    return sum;
}

/// -H_2n + H_{n+m} + H_n - H_{n-m} - H_{floor((n+m)/2)} + H_{floor((n-m)/2)}
inline Rational closed_S1(long n, long m)
{
    detail::require_s1_range(n, m);
    return -harmonic(2 * n) + harmonic(n + m) + harmonic(n) - harmonic(n - m) -
           harmonic((n + m) / 2) + harmonic((n - m) / 2);
}

/// sum_k (-1)^k f_k sum_{m>=k} (-1)^m f_m with f_k = (2k+1)/((n-k)(n+k+1)).
inline Rational brute_S2(long n)
{
    detail::require_positive(n, "brute_S2");
    std::vector<Rational> f;
    f.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        f.push_back(sign_pow(k) > 0 ? detail::weight(n, k) : -detail::weight(n, k));
    Rational sum(0);
    for (long k = 0; k < n; ++k) {
        Rational inner(0);
        for (long m = k; m < n; ++m)
            inner += f[m];
        sum += f[k] * inner;
    }
    return sum;
}

/// sum_k (2k+1)^2 / ((n-k)^2 (n+k+1)^2)
inline Rational brute_S3(long n)
{
    detail::require_positive(n, "brute_S3");
    Rational sum(0);
    for (long k = 0; k < n; ++k) {
        const Rational w = detail::weight(n, k);
        sum += w * w;
    }
    return sum;
}

/// sum_k (-1)^{n+k} (2n+1)(2k+1) / ((n-k)^2 (n+k+1)^2)
inline Rational brute_S4(long n)
{
    detail::require_positive(n, "brute_S4");
    Rational sum(0);
    for (long k = 0; k < n; ++k) {
        const long gap = (n - k) * (n + k + 1);
        const Rational t = Rational(sign_pow(n + k) * (2 * n + 1) * (2 * k + 1)) /
                           (Rational(gap) * Rational(gap));
        sum += t;
    }
    return sum;
}

inline Rational closed_S2(long n)
{
    detail::require_positive(n, "closed_S2");
    const Rational d = harmonic(2 * n) - harmonic(n);
    return Rational(1, 2) * d * d + Rational(1, 2) * harmonic2(2 * n) -
           harmonic(2 * n) / Rational(2 * n + 1);
}

inline Rational closed_S3(long n)
{
    detail::require_positive(n, "closed_S3");
    return harmonic2(2 * n) - Rational(2) * harmonic(2 * n) / Rational(2 * n + 1);
}

inline Rational closed_S4(long n)
{
    detail::require_positive(n, "closed_S4");
    return -harmonic2(2 * n) + Rational(1, 2) * harmonic2(n);
}

// The same sums written with digamma, trigamma, gamma and pi^2 as doubles.

inline double transcendental_S1(long n, long m)
{
    detail::require_s1_range(n, m);
    return -digamma_int(2 * n + 1) + digamma_int(n + m + 1) + digamma_int(n + 1) -
           digamma_int(n - m + 1) - digamma_int((n + m) / 2 + 1) + digamma_int((n - m) / 2 + 1);
}

inline double transcendental_S2(long n)
{
    detail::require_positive(n, "transcendental_S2");
    const double a = 2.0 * n + 1.0;
    const double d = digamma_int(2 * n + 1) - digamma_int(n + 1);
    return pi_squared / 12.0 - euler_gamma / a + 0.5 * d * d - digamma_int(2 * n + 1) / a -
           0.5 * trigamma_int(2 * n + 1);
}

inline double transcendental_S3(long n)
{
    detail::require_positive(n, "transcendental_S3");
    const double a = 2.0 * n + 1.0;
    return pi_squared / 6.0 - 2.0 * euler_gamma / a - 2.0 / a * digamma_int(2 * n + 1) -
           trigamma_int(2 * n + 1);
}

inline double transcendental_S4(long n)
{
    detail::require_positive(n, "transcendental_S4");
    return -pi_squared / 12.0 + trigamma_int(2 * n + 1) - 0.5 * trigamma_int(n + 1);
}

/// sum_k f_k sum_{m>=k} f_m == (sum f)^2/2 + (sum f^2)/2, exactly.
inline bool identity_A10_check(std::span<const Rational> f)
{
    if (f.empty())
        throw DomainError("identity_A10_check: empty list");
    Rational lhs(0), total(0), squares(0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        Rational tail(0);
        for (std::size_t m = k; m < f.size(); ++m)
            tail += f[m];
        lhs += f[k] * tail;
        total += f[k];
        squares += f[k] * f[k];
    }
    return lhs == Rational(1, 2) * total * total + Rational(1, 2) * squares;
}

/// c_nk from its pre-summation form: the inner alternating sum is added up
/// term by term and psi(2n+1) - psi(n+1) is H_2n - H_n.
inline Rational c_coeff_direct(long n, long k)
{
    if (n < 1 || k < 0 || k >= n)
        throw DomainError("c_coeff_direct: requires 0 <= k < n");
    const long gap = (n - k) * (n + k + 1);
    const long odd = 2 * k + 1;
    const int s = sign_pow(n + k);
    Rational inner(0);
    for (long m = k; m < n; ++m) {
        const Rational t = detail::weight(n, m);
        inner += sign_pow(m + k) > 0 ? t : -t;
    }
    const Rational d = harmonic(2 * n) - harmonic(n);
    const Rational gap_sq = Rational(gap) * Rational(gap);
    return Rational(8 * s * odd, gap) * d + Rational(8 * odd, gap) * inner -
           Rational(4 * odd * odd) / gap_sq - Rational(4 * s * (2 * n + 1) * odd) / gap_sq;
}

} // namespace lnd::oracle

#endif // LND_ORACLE_HPP
