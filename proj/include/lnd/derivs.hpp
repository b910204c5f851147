#ifndef LND_DERIVS_HPP
#define LND_DERIVS_HPP

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "dpolys.hpp"
#include "errors.hpp"
#include "legendre_series.hpp"
#include "specfun.hpp"

namespace lnd {

enum class DomainClass { off_cut, on_cut_interval, endpoint_plus1, endpoint_minus1 };

constexpr std::string_view to_string(DomainClass c) noexcept
{
    switch (c) {
    case DomainClass::off_cut: return "off-cut";
    case DomainClass::on_cut_interval: return "on-cut";
    case DomainClass::endpoint_plus1: return "endpoint+1";
    case DomainClass::endpoint_minus1: return "endpoint-1";
    }
    return "unknown";
}

/// An evaluation argument together with its explicit domain class.
/// Nothing downstream reclassifies a point by proximity.
class EvalPoint {
public:
    static EvalPoint off_cut(Complex z) { return {z, DomainClass::off_cut}; }

    static EvalPoint on_cut(double x)
    {
        if (!(x > -1.0 && x < 1.0))
            throw DomainError("on-cut point must satisfy -1 < x < 1, got " + std::to_string(x));
        return {Complex(x, 0.0), DomainClass::on_cut_interval};
    }

    static EvalPoint endpoint_plus1() { return {Complex(1.0, 0.0), DomainClass::endpoint_plus1}; }
    static EvalPoint endpoint_minus1() { return {Complex(-1.0, 0.0), DomainClass::endpoint_minus1}; }

    /// Exact classification: z = +/-1 are endpoints, a real z with |z| < 1 is
    /// on the interval, anything else is off-cut.
    static EvalPoint classify(Complex z)
    {
        if (z == Complex(1.0, 0.0))
            return endpoint_plus1();
        if (z == Complex(-1.0, 0.0))
            return endpoint_minus1();
        if (z.imag() == 0.0 && z.real() > -1.0 && z.real() < 1.0)
            return on_cut(z.real());
        return off_cut(z);
    }

    Complex value() const noexcept { return value_; }
    DomainClass domain() const noexcept { return domain_; }

private:
    EvalPoint(Complex v, DomainClass d) : value_(v), domain_(d) {}

    Complex value_;
    DomainClass domain_;
};

enum class Formula {
    dp_closed_form,
    dp_endpoint_plus1,
    d2p_closed_form,
    d2p_endpoint_plus1,
    d2p_limit_minus1,
    dq_off_cut,
    dq_on_cut,
};

constexpr std::string_view to_string(Formula f) noexcept
{
    switch (f) {
    case Formula::dp_closed_form: return "dP:P_n*ln((z+1)/2)+R_n";
    case Formula::dp_endpoint_plus1: return "dP:z=1";
    case Formula::d2p_closed_form: return "d2P:-2P_n*Li2((1-z)/2)+B_n*ln((z+1)/2)+C_n";
    case Formula::d2p_endpoint_plus1: return "d2P:z=1";
    case Formula::d2p_limit_minus1: return "d2P:limit-z=-1";
    case Formula::dq_off_cut: return "dQ:off-cut";
    case Formula::dq_on_cut: return "dQ:on-cut";
    }
    return "unknown";
}

struct DerivativeResult {
    Complex value;
    Formula formula;
    long n;
    EvalPoint point;
};

/// Generated coefficients for one degree plus their double images.
struct CoeffEntry {
    CoeffTriple exact;
    std::vector<double> r;
    std::vector<double> b;
    std::vector<double> c;
    std::vector<long double> b_extended;
    std::vector<long double> c_extended;
    double c_at_minus_one = 0.0;
};

/// Memoized coefficient generation. Entries are immutable once published;
/// lookups share a lock, publication takes it exclusively.
class CoeffStore {
public:
    std::shared_ptr<const CoeffEntry> get(long n) const
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = entries_.find(n); it != entries_.end())
                return it->second;
        }
        auto entry = std::make_shared<CoeffEntry>();
        entry->exact = coeff_triple(n);
        entry->r = entry->exact.r.to_doubles();
        entry->b = entry->exact.b.to_doubles();
        entry->c = entry->exact.c.to_doubles();
        entry->b_extended = entry->exact.b.to_long_doubles();
        entry->c_extended = entry->exact.c.to_long_doubles();
        entry->c_at_minus_one = entry->exact.c.at_minus_one().to_double();
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.emplace(n, std::move(entry));
        return it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::map<long, std::shared_ptr<const CoeffEntry>> entries_;
};

inline CoeffStore& coefficient_store()
{
    static CoeffStore store;
    return store;
}

namespace detail {

inline void require_nonnegative(long n, const char* who)
{
    if (n < 0)
        throw DomainError(std::string(who) + ": degree must be non-negative, got " + std::to_string(n));
}

inline bool on_real_axis(Complex z) { return std::abs(z.imag()) <= cut_tolerance; }

// Real z < -1 puts ln((z+1)/2) and Li2((1-z)/2) on their cuts.
inline void require_off_p_cut(Complex z, const char* who)
{
    if (on_real_axis(z) && z.real() < -1.0)
        throw DomainError(std::string(who) + ": z on the cut (-inf, -1]");
}

} // namespace detail

inline DerivativeResult dP_dnu(long n, const EvalPoint& p)
{
    detail::require_nonnegative(n, "dP_dnu");
    const Complex z = p.value();
    if (p.domain() == DomainClass::endpoint_plus1 || z == Complex(1.0, 0.0))
        return {Complex(0.0, 0.0), Formula::dp_endpoint_plus1, n, p};
    if (p.domain() == DomainClass::endpoint_minus1 || z == Complex(-1.0, 0.0))
        throw SingularPoint("dP_dnu: logarithmic singularity at z = -1");
    const auto coeffs = coefficient_store().get(n);
    if (p.domain() == DomainClass::on_cut_interval) {
        const double x = z.real();
        const double v = legendre_p(static_cast<std::size_t>(n), x) * std::log((x + 1.0) / 2.0) +
                         eval_legendre<double>(coeffs->r, x);
        return {Complex(v, 0.0), Formula::dp_closed_form, n, p};
    }
    detail::require_off_p_cut(z, "dP_dnu");
    const Complex v = legendre_p(static_cast<std::size_t>(n), z) * log_shift_plus(z) +
                      eval_legendre<Complex>(coeffs->r, z);
    return {v, Formula::dp_closed_form, n, p};
}

inline DerivativeResult d2P_dnu2(long n, const EvalPoint& p)
{
    detail::require_nonnegative(n, "d2P_dnu2");
    const Complex z = p.value();
    if (p.domain() == DomainClass::endpoint_plus1 || z == Complex(1.0, 0.0))
        return {Complex(0.0, 0.0), Formula::d2p_endpoint_plus1, n, p};
    const auto coeffs = coefficient_store().get(n);
    if (p.domain() == DomainClass::endpoint_minus1 || z == Complex(-1.0, 0.0)) {
        // B_n(-1) = 0 removes the logarithm; Li2(1) = pi^2/6 and P_n(-1) = (-1)^n.
        const double v = -2.0 * sign_pow(n) * zeta2 + coeffs->c_at_minus_one;
        return {Complex(v, 0.0), Formula::d2p_limit_minus1, n, p};
    }
    const auto deg = static_cast<std::size_t>(n);
    if (p.domain() == DomainClass::on_cut_interval) {
        const double x = z.real();
        const double v = -2.0 * legendre_p(deg, x) * dilog((1.0 - x) / 2.0) +
                         eval_legendre<double>(coeffs->b, x) * std::log((x + 1.0) / 2.0) +
                         eval_legendre<double>(coeffs->c, x);
        return {Complex(v, 0.0), Formula::d2p_closed_form, n, p};
    }
    detail::require_off_p_cut(z, "d2P_dnu2");
    const Complex v = -2.0 * legendre_p(deg, z) * dilog((1.0 - z) / 2.0) +
                      eval_legendre<Complex>(coeffs->b, z) * log_shift_plus(z) +
                      eval_legendre<Complex>(coeffs->c, z);
    return {v, Formula::d2p_closed_form, n, p};
}

/// Any integer degree: the value at -n-1 equals the value at n.
inline DerivativeResult d2P_dnu2_anydeg(long nu, const EvalPoint& p)
{
    DerivativeResult r = d2P_dnu2(nu >= 0 ? nu : -nu - 1, p);
    r.n = nu;
    return r;
}

inline DerivativeResult dQ_dnu_offcut(long n, Complex z)
{
    detail::require_nonnegative(n, "dQ_dnu_offcut");
    if (z == Complex(1.0, 0.0) || z == Complex(-1.0, 0.0))
        throw SingularPoint("dQ_dnu_offcut: logarithmic singularity at z = +/-1");
    if (detail::on_real_axis(z) && z.real() < 1.0) {
        if (z.real() > -1.0)
            throw CutAmbiguity("dQ_dnu_offcut: z lies on (-1, 1); use the on-cut evaluation");
        throw DomainError("dQ_dnu_offcut: z on (-inf, -1] is outside the principal-branch domain");
    }
    // The terms are individually much larger than their sum once |z| grows,
    // so the combination is carried in long double and rounded once.
    using CE = ComplexExtended;
    const auto coeffs = coefficient_store().get(n);
    const long double s = sign_pow(n);
    const CE w(z.real(), z.imag() + 0.0);
    const CE pn = legendre_p(static_cast<std::size_t>(n), w);
    const CE lp = std::log((w + 1.0L) / 2.0L);
    const CE lm = std::log((w - 1.0L) / 2.0L);
    const CE sum = -pn * dilog((1.0L - w) / 2.0L) - 0.5L * pn * lp * lm +
                   0.25L * eval_legendre<CE>(coeffs->b_extended, w) * lp -
                   0.25L * s * eval_legendre<CE>(coeffs->b_extended, -w) * lm -
                   detail::zeta2_extended * pn + 0.25L * eval_legendre<CE>(coeffs->c_extended, w) -
                   0.25L * s * eval_legendre<CE>(coeffs->c_extended, -w);
    const Complex v(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    return {v, Formula::dq_off_cut, n, EvalPoint::off_cut(z)};
}

/// Real-valued derivative on -1 < x < 1 (average of the two boundary values).
inline DerivativeResult dQ_dnu_oncut(long n, double x)
{
    detail::require_nonnegative(n, "dQ_dnu_oncut");
    if (!(x > -1.0 && x < 1.0))
        throw DomainError("dQ_dnu_oncut: requires -1 < x < 1, got " + std::to_string(x));
    const auto coeffs = coefficient_store().get(n);
    const double s = sign_pow(n);
    const double pn = legendre_p(static_cast<std::size_t>(n), x);
    const double lp = std::log((1.0 + x) / 2.0);
    const double lm = std::log((1.0 - x) / 2.0);
    const double v = -pn * dilog((1.0 - x) / 2.0) - 0.5 * pn * lp * lm +
                     0.25 * eval_legendre<double>(coeffs->b, x) * lp -
                     0.25 * s * eval_legendre<double>(coeffs->b, -x) * lm - zeta2 * pn +
                     0.25 * eval_legendre<double>(coeffs->c, x) -
                     0.25 * s * eval_legendre<double>(coeffs->c, -x);
    return {Complex(v, 0.0), Formula::dq_on_cut, n, EvalPoint::on_cut(x)};
}

/// Dispatches on the point's class: off-cut, on-cut, endpoints are singular.
inline DerivativeResult dQ_dnu(long n, const EvalPoint& p)
{
    switch (p.domain()) {
    case DomainClass::off_cut: return dQ_dnu_offcut(n, p.value());
    case DomainClass::on_cut_interval: return dQ_dnu_oncut(n, p.value().real());
    case DomainClass::endpoint_plus1:
    case DomainClass::endpoint_minus1: break;
    }
    throw SingularPoint("dQ_dnu: logarithmic singularity at z = +/-1");
}

/// The closed forms split by transcendental factor, each an exact series.
/// Second derivative: dilog * Li2((1-z)/2) + log_plus * ln((z+1)/2) + polynomial.
struct D2PComponents {
    LegendreSeries dilog;
    LegendreSeries log_plus;
    LegendreSeries polynomial;
};

/// First derivative of Q: dilog * Li2((1-z)/2) + log_log * ln((z+1)/2) ln((z-1)/2)
/// + log_plus * ln((z+1)/2) + log_minus * ln((z-1)/2) + pi_squared_part * pi^2 + rational.
struct DQComponents {
    LegendreSeries dilog;
    LegendreSeries log_log;
    LegendreSeries log_plus;
    LegendreSeries log_minus;
    LegendreSeries pi_squared_part;
    LegendreSeries rational;
};

inline D2PComponents d2p_components(long n)
{
    detail::require_nonnegative(n, "d2p_components");
    const auto& t = coefficient_store().get(n)->exact;
    return {LegendreSeries::basis(static_cast<std::size_t>(n), Rational(-2)), t.b, t.c};
}

inline DQComponents dq_components(long n)
{
    detail::require_nonnegative(n, "dq_components");
    const auto& t = coefficient_store().get(n)->exact;
    const auto deg = static_cast<std::size_t>(n);
    const Rational quarter(1, 4);
    const Rational signed_quarter(-sign_pow(n), 4);
    return {
        LegendreSeries::basis(deg, Rational(-1)),
        LegendreSeries::basis(deg, Rational(-1, 2)),
        t.b * quarter,
        parity_flip(t.b) * signed_quarter,
        LegendreSeries::basis(deg, Rational(-1, 6)),
        t.c * quarter + parity_flip(t.c) * signed_quarter,
    };
}

} // namespace lnd

#endif // LND_DERIVS_HPP
