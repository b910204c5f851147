#ifndef LND_RATIONAL_HPP
#define LND_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace lnd {

/// Exact signed rational number in canonical form (positive denominator,
/// coprime parts). Thin value type over GMP's mpq_class.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) // NOLINT(google-explicit-constructor)
        : q_(static_cast<long>(value))
    {
    }

    template <std::integral I, std::integral J>
    Rational(I num, J den)
    {
        if (den == 0)
            throw DomainError("Rational: zero denominator");
        q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p/q" or "p" (decimal, optional leading '-').
    static Rational parse(std::string_view text)
    {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return from_parts(text, "1");
        return from_parts(text.substr(0, slash), text.substr(slash + 1));
    }

    static Rational from_parts(std::string_view num, std::string_view den)
    {
        mpz_class n, d;
        if (num.empty() || den.empty() || n.set_str(std::string(num), 10) != 0 ||
            d.set_str(std::string(den), 10) != 0)
            throw DomainError("Rational: malformed fraction '" + std::string(num) + "/" +
                              std::string(den) + "'");
        if (d == 0)
            throw DomainError("Rational: zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }
    std::string str() const { return q_.get_str(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    const mpq_class& raw() const noexcept { return q_; }

    /// Nearest double (round-half-even). mpq_get_d truncates, so the quotient
    /// is formed with a sticky bit and handed to the hardware conversion.
    double to_double() const
    {
        if (is_zero())
            return 0.0;
        mpz_class num = abs(q_.get_num());
        const mpz_class& den = q_.get_den();
        const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
        const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
        // Choose shift so that the quotient has 64 or 65 bits.
        long shift = 64 - (nb - db);
        mpz_class scaled = num;
        if (shift > 0)
            mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        mpz_class den_scaled = den;
        if (shift < 0)
            mpz_mul_2exp(den_scaled.get_mpz_t(), den_scaled.get_mpz_t(),
                         static_cast<mp_bitcnt_t>(-shift));
        mpz_class quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den_scaled.get_mpz_t());
        // Bring the quotient to at most 64 bits, folding dropped bits into the sticky bit.
        bool sticky = rem != 0;
        while (mpz_sizeinbase(quot.get_mpz_t(), 2) > 64) {
            sticky = sticky || mpz_odd_p(quot.get_mpz_t());
            mpz_fdiv_q_2exp(quot.get_mpz_t(), quot.get_mpz_t(), 1);
            --shift;
        }
        std::uint64_t bits = 0;
        mpz_export(&bits, nullptr, -1, sizeof(bits), 0, 0, quot.get_mpz_t());
        if (sticky)
            bits |= 1u;
        const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
        return sign() < 0 ? -magnitude : magnitude;
    }

    /// Nearest double plus the rounded residual, good to about 106 bits.
    long double to_long_double() const
    {
        const double hi = to_double();
        const double lo = mpq_class(q_ - mpq_class(hi)).get_d();
        return static_cast<long double>(hi) + static_cast<long double>(lo);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw DomainError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// (-1)^k as an int.
constexpr int sign_pow(long k) noexcept { return (k % 2 == 0) ? 1 : -1; }

} // namespace lnd

#endif // LND_RATIONAL_HPP
