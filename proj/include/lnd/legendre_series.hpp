#ifndef LND_LEGENDRE_SERIES_HPP
#define LND_LEGENDRE_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lnd {

/// Polynomial held as exact coefficients over the Legendre basis:
/// s(z) = sum_k coeffs[k] P_k(z). Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is structural.
class LegendreSeries {
public:
    LegendreSeries() = default;

    explicit LegendreSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    LegendreSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// scale * P_k.
    static LegendreSeries basis(std::size_t k, const Rational& scale = Rational(1))
    {
        std::vector<Rational> c(k + 1);
        c[k] = scale;
        return LegendreSeries(std::move(c));
    }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    /// Value at z = 1 (every P_k(1) = 1).
    Rational at_plus_one() const
    {
        Rational sum(0);
        for (const auto& c : coeffs_)
            sum += c;
        return sum;
    }

    /// Value at z = -1 (P_k(-1) = (-1)^k).
    Rational at_minus_one() const
    {
        Rational sum(0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            sum += (k % 2 == 0) ? coeffs_[k] : -coeffs_[k];
        return sum;
    }

    std::vector<long double> to_long_doubles() const
    {
        std::vector<long double> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(c.to_long_double());
        return out;
    }

    std::vector<double> to_doubles() const
    {
        std::vector<double> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(c.to_double());
        return out;
    }

    LegendreSeries& operator+=(const LegendreSeries& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    LegendreSeries& operator-=(const LegendreSeries& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    LegendreSeries& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        trim();
        return *this;
    }

    friend LegendreSeries operator+(LegendreSeries a, const LegendreSeries& b) { return a += b; }
    friend LegendreSeries operator-(LegendreSeries a, const LegendreSeries& b) { return a -= b; }
    friend LegendreSeries operator*(LegendreSeries a, const Rational& s) { return a *= s; }
    friend LegendreSeries operator*(const Rational& s, LegendreSeries a) { return a *= s; }
    friend LegendreSeries operator-(LegendreSeries a) { return a *= Rational(-1); }

    friend bool operator==(const LegendreSeries& a, const LegendreSeries& b) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

namespace detail {
template <class T>
struct scalar_of {
    using type = T;
};
template <class T>
struct scalar_of<std::complex<T>> {
    using type = T;
};
} // namespace detail

/// sum_k coeffs[k] P_k(z) with P_k(z) from the upward three-term recurrence.
/// Arithmetic runs in the precision of T whatever the coefficient type.
template <class T, class Coeffs>
T eval_legendre(const Coeffs& coeffs, const T& z)
{
    using R = typename detail::scalar_of<T>::type;
    if (std::size(coeffs) == 0)
        return T(0);
    T p_prev(1); // P_0
    T sum = static_cast<R>(coeffs[0]) * p_prev;
    if (std::size(coeffs) == 1)
        return sum;
    T p = z; // P_1
    sum += static_cast<R>(coeffs[1]) * p;
    for (std::size_t k = 1; k + 1 < std::size(coeffs); ++k) {
        const R kk = static_cast<R>(k);
        T next = ((R(2) * kk + R(1)) * z * p - kk * p_prev) / (kk + R(1));
        p_prev = p;
        p = next;
        sum += static_cast<R>(coeffs[k + 1]) * p;
    }
    return sum;
}

/// P_n(z).
template <class T>
T legendre_p(std::size_t n, const T& z)
{
    using R = typename detail::scalar_of<T>::type;
    T p_prev(1);
    if (n == 0)
        return p_prev;
    T p = z;
    for (std::size_t k = 1; k < n; ++k) {
        const R kk = static_cast<R>(k);
        T next = ((R(2) * kk + R(1)) * z * p - kk * p_prev) / (kk + R(1));
        p_prev = p;
        p = next;
    }
    return p;
}

template <class T>
T eval_series(const LegendreSeries& s, const T& z)
{
    const auto c = s.to_doubles();
    return eval_legendre<T>(c, z);
}

/// Series for s(-z).
inline LegendreSeries parity_flip(const LegendreSeries& s)
{
    std::vector<Rational> c = s.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2)
        c[k] = -c[k];
    return LegendreSeries(std::move(c));
}

/// [d/dz (1 - z^2) d/dz + n(n+1)] s, diagonal in the Legendre basis.
inline LegendreSeries legendre_operator(const LegendreSeries& s, long n)
{
    std::vector<Rational> c = s.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const long kk = static_cast<long>(k);
        c[k] *= Rational((n - kk) * (n + kk + 1));
    }
    return LegendreSeries(std::move(c));
}

/// (z - 1) dP_n/dz = n P_n + sum_{k<n} (-1)^{n+k} (2k+1) P_k.
inline LegendreSeries zminus1_dz(long n)
{
    if (n < 0)
        throw DomainError("zminus1_dz: negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[n] = Rational(n);
    for (long k = 0; k < n; ++k)
        c[k] = Rational(sign_pow(n + k) * (2 * k + 1));
    return LegendreSeries(std::move(c));
}

/// (z + 1) dP_n/dz = n P_n + sum_{k<n} (2k+1) P_k.
inline LegendreSeries zplus1_dz(long n)
{
    if (n < 0)
        throw DomainError("zplus1_dz: negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[n] = Rational(n);
    for (long k = 0; k < n; ++k)
        c[k] = Rational(2 * k + 1);
    return LegendreSeries(std::move(c));
}

/// (z - 1) ds/dz for a general series, by linearity.
inline LegendreSeries zminus1_dz(const LegendreSeries& s)
{
    std::vector<Rational> out(s.size());
    const auto& c = s.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero())
            continue;
        const long n = static_cast<long>(j);
        out[j] += c[j] * Rational(n);
        for (long k = 0; k < n; ++k)
            out[k] += c[j] * Rational(sign_pow(n + k) * (2 * k + 1));
    }
    return LegendreSeries(std::move(out));
}

/// Monomial coefficients of P_0..P_n, exactly; row k holds P_k ascending.
inline std::vector<std::vector<Rational>> legendre_monomial_table(std::size_t n)
{
    std::vector<std::vector<Rational>> table;
    table.reserve(n + 1);
    table.push_back({Rational(1)});
    if (n == 0)
        return table;
    table.push_back({Rational(0), Rational(1)});
    for (std::size_t k = 1; k < n; ++k) {
        const long kk = static_cast<long>(k);
        std::vector<Rational> next(k + 2);
        const Rational a(2 * kk + 1, kk + 1);
        const Rational b(kk, kk + 1);
        for (std::size_t j = 0; j < table[k].size(); ++j)
            next[j + 1] += a * table[k][j];
        for (std::size_t j = 0; j < table[k - 1].size(); ++j)
            next[j] -= b * table[k - 1][j];
        table.push_back(std::move(next));
    }
    return table;
}

/// Exact monomial coefficients (ascending powers) of a Legendre series.
/// Empty for the zero polynomial.
inline std::vector<Rational> to_monomial(const LegendreSeries& s)
{
    if (s.is_zero())
        return {};
    const auto table = legendre_monomial_table(s.size() - 1);
    std::vector<Rational> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s.coeffs()[k].is_zero())
            continue;
        for (std::size_t j = 0; j < table[k].size(); ++j)
            out[j] += s.coeffs()[k] * table[k][j];
    }
    while (!out.empty() && out.back().is_zero())
        out.pop_back();
    return out;
}

} // namespace lnd

#endif // LND_LEGENDRE_SERIES_HPP
