#ifndef LND_HARMONIC_HPP
#define LND_HARMONIC_HPP

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lnd {

/// Growable tables of H_N = sum 1/k and H_N^(2) = sum 1/k^2.
///
/// Tables only ever grow. Readers take a shared lock, growth takes the
/// exclusive lock, so a reader always sees a consistent prefix.
class HarmonicCache {
public:
    HarmonicCache() : h1_{Rational(0)}, h2_{Rational(0)} {}

    Rational h1(std::size_t n) const
    {
        ensure(n);
        std::shared_lock lock(mutex_);
        return h1_[n];
    }

    Rational h2(std::size_t n) const
    {
        ensure(n);
        std::shared_lock lock(mutex_);
        return h2_[n];
    }

    /// Precomputes both tables up to and including index n.
    void ensure(std::size_t n) const
    {
        {
            std::shared_lock lock(mutex_);
            if (n < h1_.size())
                return;
        }
        std::unique_lock lock(mutex_);
        h1_.reserve(n + 1);
        h2_.reserve(n + 1);
        for (std::size_t k = h1_.size(); k <= n; ++k) {
            const long kk = static_cast<long>(k);
            h1_.push_back(h1_.back() + Rational(1, kk));
            h2_.push_back(h2_.back() + Rational(1, kk * kk));
        }
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return h1_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::vector<Rational> h1_;
    mutable std::vector<Rational> h2_;
};

inline HarmonicCache& harmonic_cache()
{
    static HarmonicCache cache;
    return cache;
}

namespace detail {
inline std::size_t checked_index(long n, const char* who)
{
    if (n < 0)
        throw DomainError(std::string(who) + ": negative argument");
    return static_cast<std::size_t>(n);
}
} // namespace detail

/// H_N; H_0 = 0.
inline Rational harmonic(long n) { return harmonic_cache().h1(detail::checked_index(n, "harmonic")); }

/// H_N^(2); H_0^(2) = 0.
inline Rational harmonic2(long n) { return harmonic_cache().h2(detail::checked_index(n, "harmonic2")); }

/// psi(a) - psi(b) = H_{a-1} - H_{b-1} for positive integers a, b.
inline Rational psi_diff(long a, long b)
{
    if (a < 1 || b < 1)
        throw DomainError("psi_diff: arguments must be positive integers");
    return harmonic(a - 1) - harmonic(b - 1);
}

/// psi_1(a) - psi_1(b) = H_{b-1}^(2) - H_{a-1}^(2) for positive integers a, b.
inline Rational trigamma_diff(long a, long b)
{
    if (a < 1 || b < 1)
        throw DomainError("trigamma_diff: arguments must be positive integers");
    return harmonic2(b - 1) - harmonic2(a - 1);
}

/// sum_{k=1}^N (-1)^k / k, via -H_N + H_{floor(N/2)}.
inline Rational alt_harmonic(long n)
{
    detail::checked_index(n, "alt_harmonic");
    return harmonic(n / 2) - harmonic(n);
}

} // namespace lnd

#endif // LND_HARMONIC_HPP
