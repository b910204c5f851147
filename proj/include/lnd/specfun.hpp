#ifndef LND_SPECFUN_HPP
#define LND_SPECFUN_HPP

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "harmonic.hpp"
#include "rational.hpp"

namespace lnd {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double pi = std::numbers::pi;
/// pi^2, correctly rounded (not pi*pi).
inline constexpr double pi_squared = 9.8696044010893586188344909998761511;
inline constexpr double zeta2 = 1.6449340668482264364724151666460252; // pi^2/6

/// Imaginary parts at or below this magnitude are treated as lying on a cut.
inline constexpr double cut_tolerance = 1e-14;

/// Which side of a branch cut a point on the cut is approached from.
enum class CutSide { none, above, below };

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class T>
struct real_of {
    using type = T;
};
template <class T>
struct real_of<std::complex<T>> {
    using type = T;
};
template <class T>
using real_of_t = typename real_of<T>::type;

template <class T>
real_of_t<T> real_part(const T& v)
{
    if constexpr (is_complex<T>::value)
        return v.real();
    else
        return v;
}

inline constexpr long double zeta2_extended = 1.6449340668482264364724151666460252L;

/// B_{2k} / (2k+1)! for k = 1..24, from the exact Bernoulli recurrence.
template <class R>
const std::array<R, 24>& dilog_bernoulli_coefficients()
{
    static const std::array<R, 24> table = [] {
        constexpr int max_index = 2 * 24;
        std::vector<Rational> b(max_index + 1);
        b[0] = Rational(1);
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        for (int m = 1; m <= max_index; ++m) {
            Rational acc(0);
            mpz_class binom = 1; // C(m+1, 0)
            for (int j = 0; j < m; ++j) {
                acc += Rational(mpq_class(binom)) * b[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            b[m] = -acc / Rational(m + 1);
        }
        std::array<R, 24> out{};
        mpz_class fact = 1;
        for (int n = 1; n <= max_index + 1; ++n) {
            fact *= n;
            if (n % 2 == 1 && n >= 3)
                out[(n - 1) / 2 - 1] = static_cast<R>((b[n - 1] / Rational(mpq_class(fact))).to_long_double());
        }
        return out;
    }();
    return table;
}

template <class T>
T dilog_power_series(const T& w)
{
    using R = real_of_t<T>;
    const R stop = std::numeric_limits<R>::epsilon() / 8;
    T term = w;
    T sum = w;
    for (int k = 2; k < 400; ++k) {
        term *= w;
        const T add = term / static_cast<R>(k * k);
        sum += add;
        if (std::abs(add) <= stop * std::abs(sum))
            break;
    }
    return sum;
}

/// Series in u = -ln(1 - w); used for 1/2 < |w| <= 1, Re w <= 1/2 where |u| < 1.26.
template <class T>
T dilog_bernoulli_series(const T& w)
{
    using R = real_of_t<T>;
    const R stop = std::numeric_limits<R>::epsilon() / 8;
    const T u = -std::log(R(1) - w);
    const T u2 = u * u;
    T sum = u - R(0.25) * u2;
    T power = u;
    for (const R c : dilog_bernoulli_coefficients<R>()) {
        power *= u2;
        const T add = c * power;
        sum += add;
        if (std::abs(add) <= stop * std::abs(sum))
            break;
    }
    return sum;
}

/// Principal Li2 for w off [1, inf) (w = 1 allowed), in the precision of T.
template <class T>
T dilog_core(const T& w)
{
    using R = real_of_t<T>;
    const R z2 = static_cast<R>(zeta2_extended);
    if (w == T(0))
        return T(0);
    if (w == T(1))
        return T(z2);
    const R modulus = std::abs(w);
    if (modulus > R(1)) {
        const T l = std::log(-w);
        return -dilog_core(T(R(1)) / w) - z2 - R(0.5) * l * l;
    }
    if (real_part(w) > R(0.5))
        return z2 - std::log(w) * std::log(R(1) - w) - dilog_core(R(1) - w);
    if (modulus <= R(0.5))
        return dilog_power_series(w);
    return dilog_bernoulli_series(w);
}

template <class T>
T finite_or_throw(const T& v, const char* who)
{
    bool ok;
    if constexpr (is_complex<T>::value)
        ok = std::isfinite(v.real()) && std::isfinite(v.imag());
    else
        ok = std::isfinite(v);
    if (!ok)
        throw DomainError(std::string(who) + ": non-finite result");
    return v;
}

} // namespace detail

/// Real dilogarithm for x <= 1.
inline double dilog(double x)
{
    if (!std::isfinite(x))
        throw DomainError("dilog: non-finite argument");
    if (x > 1.0)
        throw CutAmbiguity("dilog: real argument " + std::to_string(x) +
                           " > 1 lies on the branch cut");
    return detail::finite_or_throw(detail::dilog_core(x), "dilog");
}

/// Principal-branch complex dilogarithm, cut along [1, inf).
///
/// Points within `cut_tolerance` of the cut need a side; the boundary value
/// there is Re Li2(x) +/- i*pi*ln(x).
inline Complex dilog(Complex w, CutSide side = CutSide::none)
{
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw DomainError("dilog: non-finite argument");
    if (std::abs(w.imag()) <= cut_tolerance && w.real() > 1.0) {
        if (side == CutSide::none)
            throw CutAmbiguity("dilog: argument on the branch cut [1, inf) needs a side directive");
        const double x = w.real();
        const double lx = std::log(x);
        const double re = 2.0 * zeta2 - 0.5 * lx * lx - detail::dilog_core(1.0 / x);
        const double im = (side == CutSide::above ? 1.0 : -1.0) * pi * lx;
        return {re, im};
    }
    return detail::finite_or_throw(detail::dilog_core(w), "dilog");
}

using ComplexExtended = std::complex<long double>;

/// Complex dilogarithm in long double, for callers that need headroom
/// against cancellation. Same cut and side rules as the double version.
inline ComplexExtended dilog(ComplexExtended w)
{
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw DomainError("dilog: non-finite argument");
    if (std::abs(w.imag()) <= cut_tolerance && w.real() > 1.0L)
        throw CutAmbiguity("dilog: argument on the branch cut [1, inf) needs a side directive");
    return detail::finite_or_throw(detail::dilog_core(w), "dilog");
}

/// Principal ln((z+1)/2); cut along (-inf, -1].
inline Complex log_shift_plus(Complex z)
{
    if (z == Complex(-1.0, 0.0))
        throw SingularPoint("ln((z+1)/2) is singular at z = -1");
    Complex arg = (z + 1.0) / 2.0;
    if (arg.imag() == 0.0)
        arg = Complex(arg.real(), 0.0); // -0 would select the lower branch
    return std::log(arg);
}

/// Principal ln((z-1)/2); cut along (-inf, 1]. Points on the cut need a side.
inline Complex log_shift_minus(Complex z, CutSide side = CutSide::none)
{
    if (z == Complex(1.0, 0.0))
        throw SingularPoint("ln((z-1)/2) is singular at z = 1");
    if (std::abs(z.imag()) <= cut_tolerance && z.real() < 1.0) {
        if (side == CutSide::none)
            throw CutAmbiguity("ln((z-1)/2): argument on the branch cut (-inf, 1] needs a side directive");
        const double im = side == CutSide::above ? pi : -pi;
        return {std::log((1.0 - z.real()) / 2.0), im};
    }
    return std::log((z - 1.0) / 2.0);
}

/// psi(m) = -gamma + H_{m-1}.
inline double digamma_int(long m)
{
    if (m < 1)
        throw DomainError("digamma_int: argument must be a positive integer");
    return harmonic(m - 1).to_double() - euler_gamma;
}

/// psi_1(m) = pi^2/6 - H_{m-1}^(2).
inline double trigamma_int(long m)
{
    if (m < 1)
        throw DomainError("trigamma_int: argument must be a positive integer");
    return zeta2 - harmonic2(m - 1).to_double();
}

} // namespace lnd

#endif // LND_SPECFUN_HPP
