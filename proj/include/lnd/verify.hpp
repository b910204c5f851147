#ifndef LND_VERIFY_HPP
#define LND_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "derivs.hpp"
#include "dpolys.hpp"
#include "errors.hpp"
#include "legendre_series.hpp"
#include "oracle.hpp"
#include "specfun.hpp"

namespace lnd::verify {

struct Case {
    std::string identity;
    std::string index;
    bool pass = false;
    std::optional<double> residual; // nullopt: compared exactly
};

struct Report {
    std::string suite;
    std::vector<Case> cases;

    std::size_t passed() const
    {
        return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return c.pass; }));
    }
    std::size_t failed() const { return cases.size() - passed(); }
    bool ok() const { return failed() == 0; }

    void add_exact(std::string identity, std::string index, bool pass)
    {
        cases.push_back({std::move(identity), std::move(index), pass, std::nullopt});
    }
    void add_numeric(std::string identity, std::string index, double residual, double tol)
    {
        cases.push_back({std::move(identity), std::move(index), std::isfinite(residual) && residual <= tol,
                         residual});
    }
    void append(const Report& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }
};

struct Options {
    long n_max = -1;               // suite default when negative
    std::optional<double> tol;     // suite default when empty
    std::uint64_t seed = 42;
};

inline nlohmann::json to_json(const Report& r)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json residual = c.residual ? nlohmann::json(*c.residual) : nlohmann::json("exact");
        cases.push_back({{"identity", c.identity},
                         {"index", c.index},
                         {"status", c.pass ? "pass" : "fail"},
                         {"residual", residual}});
    }
    return {{"suite", r.suite},
            {"cases", cases},
            {"summary", {{"total", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

namespace detail {

inline std::string idx(long n) { return "n=" + std::to_string(n); }
inline std::string idx(long n, long m) { return "n=" + std::to_string(n) + ",m=" + std::to_string(m); }

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

/// Monomial coefficients (ascending) given as strings.
inline bool monomial_is(const LegendreSeries& s, const std::vector<const char*>& ascending)
{
    std::vector<Rational> want;
    for (const char* c : ascending)
        want.push_back(Rational::parse(c));
    while (!want.empty() && want.back().is_zero())
        want.pop_back();
    return to_monomial(s) == want;
}

} // namespace detail

/// Low-degree closed forms, coefficient for coefficient (n <= 3).
inline Report lown(const Options& opt = {})
{
    Report rep{"lown", {}};
    const long n_max = std::min(opt.n_max < 0 ? 3L : opt.n_max, 3L);
    using Ascending = std::vector<std::vector<const char*>>;
    // Second-derivative factors: Li2, ln((z+1)/2), polynomial.
    const Ascending p_dilog = {{"-2"}, {"0", "-2"}, {"1", "0", "-3"}, {"0", "3", "0", "-5"}};
    const Ascending p_log = {{}, {"2", "2"}, {"-1/2", "3", "7/2"}, {"-4/3", "-5/2", "5", "37/6"}};
    const Ascending p_poly = {{}, {"2", "-2"}, {"1/4", "5/2", "-11/4"}, {"-10/9", "19/12", "23/6", "-155/36"}};
    // dQ factors: Li2, ln ln, ln((z+1)/2), ln((z-1)/2), pi^2, rational.
    const Ascending q_dilog = {{"-1"}, {"0", "-1"}, {"1/2", "0", "-3/2"}, {"0", "3/2", "0", "-5/2"}};
    const Ascending q_loglog = {{"-1/2"}, {"0", "-1/2"}, {"1/4", "0", "-3/4"}, {"0", "3/4", "0", "-5/4"}};
    const Ascending q_logp = {{}, {"1/2", "1/2"}, {"-1/8", "3/4", "7/8"}, {"-1/3", "-5/8", "5/4", "37/24"}};
    const Ascending q_logm = {{}, {"1/2", "-1/2"}, {"1/8", "3/4", "-7/8"}, {"-1/3", "5/8", "5/4", "-37/24"}};
    const Ascending q_pi2 = {{"-1/6"}, {"0", "-1/6"}, {"1/12", "0", "-1/4"}, {"0", "1/4", "0", "-5/12"}};
    const Ascending q_rat = {{}, {"1"}, {"0", "5/4"}, {"-5/9", "0", "23/12"}};

    for (long n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const auto p = d2p_components(n);
        rep.add_exact("d2P.dilog-factor", detail::idx(n), detail::monomial_is(p.dilog, p_dilog[i]));
        rep.add_exact("d2P.B_n", detail::idx(n), detail::monomial_is(p.log_plus, p_log[i]));
        rep.add_exact("d2P.C_n", detail::idx(n), detail::monomial_is(p.polynomial, p_poly[i]));
        const auto q = dq_components(n);
        rep.add_exact("dQ.dilog-factor", detail::idx(n), detail::monomial_is(q.dilog, q_dilog[i]));
        rep.add_exact("dQ.loglog-factor", detail::idx(n), detail::monomial_is(q.log_log, q_loglog[i]));
        rep.add_exact("dQ.logplus-factor", detail::idx(n), detail::monomial_is(q.log_plus, q_logp[i]));
        rep.add_exact("dQ.logminus-factor", detail::idx(n), detail::monomial_is(q.log_minus, q_logm[i]));
        rep.add_exact("dQ.pi2-part", detail::idx(n), detail::monomial_is(q.pi_squared_part, q_pi2[i]));
        rep.add_exact("dQ.rational-part", detail::idx(n), detail::monomial_is(q.rational, q_rat[i]));
    }
    if (n_max >= 1) {
        rep.add_exact("R_0", detail::idx(0), r_poly(0).is_zero());
        rep.add_exact("R_1", detail::idx(1), detail::monomial_is(r_poly(1), {"-1", "1"}));
    }
    return rep;
}

/// Summation identities behind every coefficient formula.
inline Report sums(const Options& opt = {})
{
    Report rep{"sums", {}};
    const long n_max = opt.n_max < 0 ? 200 : opt.n_max;
    const double tol = opt.tol.value_or(1e-12);
    for (long n = 1; n <= n_max; ++n) {
        bool s1_all = true;
        double s1_float = 0.0;
        for (long m = 0; m < n; ++m) {
            const Rational closed = oracle::closed_S1(n, m);
            s1_all = s1_all && oracle::brute_S1(n, m) == closed;
            s1_float = std::max(s1_float, std::abs(closed.to_double() - oracle::transcendental_S1(n, m)));
        }
        rep.add_exact("S1.brute=closed(all m)", detail::idx(n), s1_all);
        rep.add_numeric("S1.closed~transcendental(all m)", detail::idx(n), s1_float, tol);
        rep.add_exact("S1.m0=-(H2n-Hn)", detail::idx(n),
                      oracle::closed_S1(n, 0) == harmonic(n) - harmonic(2 * n));

        const Rational s2 = oracle::closed_S2(n), s3 = oracle::closed_S3(n), s4 = oracle::closed_S4(n);
        rep.add_exact("S2.brute=closed", detail::idx(n), oracle::brute_S2(n) == s2);
        rep.add_exact("S3.brute=closed", detail::idx(n), oracle::brute_S3(n) == s3);
        rep.add_exact("S4.brute=closed", detail::idx(n), oracle::brute_S4(n) == s4);
        const Rational s1m0 = oracle::closed_S1(n, 0);
        rep.add_exact("S2.half-square-decomposition", detail::idx(n),
                      s2 == Rational(1, 2) * s1m0 * s1m0 + Rational(1, 2) * s3);
        rep.add_numeric("S2.closed~transcendental", detail::idx(n),
                        std::abs(s2.to_double() - oracle::transcendental_S2(n)), tol);
        rep.add_numeric("S3.closed~transcendental", detail::idx(n),
                        std::abs(s3.to_double() - oracle::transcendental_S3(n)), tol);
        rep.add_numeric("S4.closed~transcendental", detail::idx(n),
                        std::abs(s4.to_double() - oracle::transcendental_S4(n)), tol);

        bool c_all = true;
        for (long k = 0; k < n; ++k)
            c_all = c_all && c_coeff(n, k) == oracle::c_coeff_direct(n, k);
        rep.add_exact("c_nk.closed=direct(all k)", detail::idx(n), c_all);
        const Rational cnn = c_nn_coeff(n);
        rep.add_exact("c_nn.closed=-sum(c_nk)", detail::idx(n), cnn == c_nn_by_summation(n));
        rep.add_numeric("c_nn.closed~transcendental", detail::idx(n),
                        std::abs(cnn.to_double() - c_nn_closed_form_double(n)), tol);
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> len(1, 12), num(-50, 50), den(1, 30);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> f(static_cast<std::size_t>(len(rng)));
        for (auto& v : f)
            v = Rational(num(rng), den(rng));
        rep.add_exact("tail-product-identity", "trial=" + std::to_string(trial), oracle::identity_A10_check(f));
    }
    return rep;
}

/// Differential identities, endpoint constraints and the cross-relations.
inline Report ode(const Options& opt = {})
{
    Report rep{"ode", {}};
    const long n_max = opt.n_max < 0 ? 100 : opt.n_max;
    for (long n = 0; n <= n_max; ++n) {
        const auto pn = LegendreSeries::basis(static_cast<std::size_t>(n));
        const LegendreSeries r = r_poly(n), b = b_poly(n), c = c_poly(n);
        rep.add_exact("L[R_n]=2((z-1)P_n'-nP_n)", detail::idx(n),
                      legendre_operator(r, n) == Rational(2) * (zminus1_dz(n) - pn * Rational(n)));
        rep.add_exact("L[B_n]=4((z+1)P_n'-nP_n)", detail::idx(n),
                      legendre_operator(b, n) == Rational(4) * (zplus1_dz(n) - pn * Rational(n)));
        rep.add_exact("L[C_n]=2(z-1)B_n'+B_n-2(2n+1)R_n", detail::idx(n),
                      legendre_operator(c, n) ==
                          Rational(2) * zminus1_dz(b) + b - r * Rational(2 * (2 * n + 1)));
        rep.add_exact("R_n(1)=0", detail::idx(n), r.at_plus_one().is_zero());
        rep.add_exact("B_n(-1)=0", detail::idx(n), b.at_minus_one().is_zero());
        rep.add_exact("C_n(1)=0", detail::idx(n), c.at_plus_one().is_zero());
        rep.add_exact("B_n=2(-1)^n R_n(-z)", detail::idx(n), b == parity_flip(r) * Rational(2 * sign_pow(n)));
        rep.add_exact("C_n.leading=telescoped", detail::idx(n), c == c_poly_telescoped(n));
    }
    return rep;
}

/// Residual of the three-term recurrence for the second derivative at z.
inline double recurrence_residual(long n, Complex z)
{
    auto d2 = [&](long m) { return d2P_dnu2(m, EvalPoint::off_cut(z)).value; };
    auto pm = [&](long m) { return legendre_p(static_cast<std::size_t>(m), z); };
    auto rm = [&](long m) { return eval_legendre<Complex>(coefficient_store().get(m)->r, z); };
    const double nn = static_cast<double>(n);
    const Complex dn = d2(n);
    const Complex lhs = (nn + 1.0) * d2(n + 1) - (2.0 * nn + 1.0) * z * dn + nn * d2(n - 1);
    const Complex rhs_log = 2.0 * (pm(n + 1) - 2.0 * z * pm(n) + pm(n - 1)) * log_shift_plus(z);
    const Complex rhs_poly = 2.0 * (rm(n + 1) - 2.0 * z * rm(n) + rm(n - 1));
    return std::abs(lhs + rhs_log + rhs_poly) / std::max(1.0, std::abs(dn));
}

/// Random points in |Re z|, |Im z| <= 1.5 away from the cut (-inf, -1].
inline std::vector<Complex> recurrence_points(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < count) {
        const Complex z(u(rng), u(rng));
        if (std::abs(z + 1.0) < 0.05 || (z.real() < -1.0 && std::abs(z.imag()) < 0.05))
            continue;
        pts.push_back(z);
    }
    return pts;
}

inline Report recurrence(const Options& opt = {})
{
    Report rep{"recurrence", {}};
    const long n_max = opt.n_max < 0 ? 20 : opt.n_max;
    const double tol = opt.tol.value_or(1e-11);
    const auto points = recurrence_points(opt.seed, 50);
    for (long n = 1; n <= n_max; ++n) {
        double worst = 0.0;
        for (const Complex z : points)
            worst = std::max(worst, recurrence_residual(n, z));
        rep.add_numeric("second-derivative-recurrence", detail::idx(n), worst, tol);
    }
    double initial0 = 0.0, initial1 = 0.0;
    for (const Complex z : points) {
        const Complex li = dilog((1.0 - z) / 2.0);
        initial0 = std::max(initial0, detail::rel_err(d2P_dnu2(0, EvalPoint::off_cut(z)).value, -2.0 * li));
        const Complex d1 = -2.0 * z * li + 2.0 * (z + 1.0) * log_shift_plus(z) - 2.0 * (z - 1.0);
        initial1 = std::max(initial1, detail::rel_err(d2P_dnu2(1, EvalPoint::off_cut(z)).value, d1));
    }
    rep.add_numeric("initial-value-n0", detail::idx(0), initial0, 1e-13);
    rep.add_numeric("initial-value-n1", detail::idx(1), initial1, 1e-13);
    return rep;
}

/// Grid for the second-derivative finite-difference comparison.
inline const std::array<Complex, 6>& fd2_grid()
{
    static const std::array<Complex, 6> grid = {Complex(0.0, 0.0),  Complex(0.6, 0.0),  Complex(-0.6, 0.0),
                                                Complex(0.3, 0.8),  Complex(0.3, -0.8), Complex(-0.2, 0.7)};
    return grid;
}

/// Off-axis points inside both hypergeometric disks for the Q comparison.
inline const std::array<Complex, 4>& fd1_q_grid()
{
    static const std::array<Complex, 4> grid = {Complex(0.3, 0.8), Complex(0.3, -0.8), Complex(-0.2, 0.7),
                                                Complex(0.1, 0.9)};
    return grid;
}

inline const std::array<double, 5>& boundary_grid()
{
    static const std::array<double, 5> grid = {-0.9, -0.5, 0.0, 0.5, 0.9};
    return grid;
}

inline const std::array<double, 3>& boundary_eps()
{
    static const std::array<double, 3> eps = {1e-3, 1e-4, 1e-5};
    return eps;
}

inline Report oracle_suite(const Options& opt = {})
{
    Report rep{"oracle", {}};
    const long n_max = opt.n_max < 0 ? 6 : opt.n_max;
    oracle::FDConfig cfg;
    if (opt.tol)
        cfg.tolerance = *opt.tol;
    for (long n = 0; n <= n_max; ++n) {
        double worst2 = 0.0;
        for (const Complex z : fd2_grid()) {
            const Complex exact = d2P_dnu2(n, EvalPoint::classify(z)).value;
            worst2 = std::max(worst2, detail::rel_err(oracle::fd2_nu(n, z, cfg), exact));
        }
        rep.add_numeric("d2P~finite-difference", detail::idx(n), worst2, cfg.tolerance);
        double worst1 = 0.0;
        for (const Complex z : fd1_q_grid())
            worst1 = std::max(worst1, detail::rel_err(oracle::fd1_q(n, z, cfg), dQ_dnu_offcut(n, z).value));
        rep.add_numeric("dQ~finite-difference", detail::idx(n), worst1, cfg.tolerance);
        double worst_cut = 0.0;
        for (const double x : boundary_grid()) {
            const Complex avg = oracle::boundary_average_limit(
                [n](Complex z) { return dQ_dnu_offcut(n, z).value; }, x, boundary_eps());
            worst_cut = std::max(worst_cut, std::abs(avg - dQ_dnu_oncut(n, x).value));
        }
        rep.add_numeric("dQ.on-cut=boundary-average", detail::idx(n), worst_cut, 1e-6);
    }
    return rep;
}

/// Runs a suite by name: lown, sums, ode, recurrence, oracle or all.
inline Report run(const std::string& suite, const Options& opt = {})
{
    if (suite == "lown")
        return lown(opt);
    if (suite == "sums")
        return sums(opt);
    if (suite == "ode")
        return ode(opt);
    if (suite == "recurrence")
        return recurrence(opt);
    if (suite == "oracle")
        return oracle_suite(opt);
    if (suite == "all") {
        Report all{"all", {}};
        for (const char* name : {"lown", "sums", "ode", "recurrence", "oracle"})
            all.append(run(name, opt));
        return all;
    }
    throw DomainError("unknown verification suite '" + suite + "'");
}

} // namespace lnd::verify

#endif // LND_VERIFY_HPP
