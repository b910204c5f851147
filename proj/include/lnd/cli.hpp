#ifndef LND_CLI_HPP
#define LND_CLI_HPP

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cache.hpp"
#include "derivs.hpp"
#include "dpolys.hpp"
#include "errors.hpp"
#include "verify.hpp"

namespace lnd::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, usage = 2, domain = 3, io = 4 };

/// Raised for malformed arguments that CLI11's own validators cannot see.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_complex(Complex z)
{
    return "{\"re\":" + fmt17(z.real()) + ",\"im\":" + fmt17(z.imag()) + "}";
}

inline double parse_double(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("not a number: '" + s + "'");
    return v;
}

/// "re" or "re,im".
inline Complex parse_point(const std::string& s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        return {parse_double(s), 0.0};
    return {parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
}

/// "start:stop:count", count points evenly spaced with both ends included.
inline std::vector<double> parse_axis(const std::string& s)
{
    const auto a = s.find(':');
    const auto b = a == std::string::npos ? a : s.find(':', a + 1);
    if (b == std::string::npos || s.find(':', b + 1) != std::string::npos)
        throw UsageError("grid axis must be start:stop:count, got '" + s + "'");
    const double start = parse_double(s.substr(0, a));
    const double stop = parse_double(s.substr(a + 1, b - a - 1));
    const std::string count_str = s.substr(b + 1);
    if (count_str.empty() || count_str.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("grid count must be a positive integer, got '" + count_str + "'");
    const long count = std::stol(count_str);
    if (count < 1)
        throw UsageError("grid count must be a positive integer, got '" + count_str + "'");
    std::vector<double> pts;
    for (long i = 0; i < count; ++i)
        pts.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1));
    return pts;
}

inline DerivativeResult evaluate(const std::string& func, long n, Complex z)
{
    const EvalPoint p = EvalPoint::classify(z);
    if (func == "d2P")
        return d2P_dnu2_anydeg(n, p);
    if (func == "dP")
        return dP_dnu(n, p);
    return dQ_dnu(n, p);
}

// ---- subcommands ------------------------------------------------------------

inline int cmd_coeffs(const std::string& poly, long n, const std::string& format, const std::string& basis,
                      std::ostream& out)
{
    const LegendreSeries s = poly == "R" ? r_poly(n) : poly == "B" ? b_poly(n) : c_poly(n);
    std::vector<Rational> coeffs = basis == "monomial" ? to_monomial(s) : s.coeffs();
    if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : coeffs)
            list.push_back(c.str());
        out << nlohmann::json{{"poly", poly}, {"n", n}, {"basis", basis}, {"order", "ascending"},
                              {"coefficients", list}}
                   .dump()
            << '\n';
        return ok;
    }
    // CSV: Legendre coefficients ascending P_0..P_d, monomials descending z^d..z^0.
    const bool descending = basis == "monomial";
    if (coeffs.empty()) {
        out << (descending ? "z^0" : "P_0") << "\n0\n";
        return ok;
    }
    const std::size_t d = coeffs.size() - 1;
    std::string header, row;
    for (std::size_t i = 0; i <= d; ++i) {
        const std::size_t k = descending ? d - i : i;
        header += (i ? "," : "") + std::string(descending ? "z^" : "P_") + std::to_string(k);
        row += (i ? "," : "") + coeffs[k].str();
    }
    out << header << '\n' << row << '\n';
    return ok;
}

inline int cmd_eval(const std::string& func, long n, const std::string& z_text, std::ostream& out)
{
    const Complex z = parse_point(z_text);
    const std::string head = "{\"func\":\"" + func + "\",\"n\":" + std::to_string(n) + ",\"z\":" + json_complex(z);
    try {
        const DerivativeResult r = evaluate(func, n, z);
        out << head << ",\"value\":" << json_complex(r.value) << ",\"formula\":\"" << to_string(r.formula)
            << "\"}\n";
        return ok;
    } catch (const Error& e) {
        out << head << ",\"error\":{\"code\":\"" << to_string(e.code()) << "\",\"message\":"
            << nlohmann::json(e.what()).dump() << "}}\n";
        return domain;
    }
}

inline int cmd_table(const std::string& func, long n_max, const std::vector<std::string>& grid, std::ostream& out)
{
    if (grid.empty() || grid.size() > 2)
        throw UsageError("--grid takes one (real axis) or two (real, imaginary) axis specs");
    const std::vector<double> re = parse_axis(grid[0]);
    const std::vector<double> im = grid.size() == 2 ? parse_axis(grid[1]) : std::vector<double>{0.0};
    out << "n,z_re,z_im,value_re,value_im,error\n";
    for (long n = 0; n <= n_max; ++n) {
        for (const double y : im) {
            for (const double x : re) {
                const Complex z(x, y);
                out << n << ',' << fmt17(x) << ',' << fmt17(y) << ',';
                try {
                    const Complex v = evaluate(func, n, z).value;
                    out << fmt17(v.real()) << ',' << fmt17(v.imag()) << ",\n";
                } catch (const Error& e) {
                    out << ",," << to_string(e.code()) << '\n';
                }
            }
        }
    }
    return ok;
}

inline int cmd_verify(const std::string& suite, const verify::Options& opt, std::ostream& out)
{
    const verify::Report rep = verify::run(suite, opt);
    out << verify::to_json(rep).dump(2) << '\n';
    return rep.ok() ? ok : verify_failed;
}

inline int cmd_cache(const std::string& action, long n_max, const std::string& dir, std::ostream& out)
{
    const cache::CoeffCache store(dir.empty() ? cache::default_directory() : std::filesystem::path(dir));
    if (action == "build") {
        const auto s = store.build(n_max);
        out << "cache " << store.directory().string() << ": " << s.written << " entries written, " << s.kept
            << " kept\n";
    } else if (action == "clear") {
        out << "cache " << store.directory().string() << ": " << store.clear() << " entries removed\n";
    } else {
        const auto s = store.stat();
        out << "cache " << store.directory().string() << ": " << s.entries << " entries, max n "
            << (s.max_n ? std::to_string(*s.max_n) : std::string("none")) << '\n';
    }
    return ok;
}

// ---- argument parsing -------------------------------------------------------

/// Parses argv and runs one subcommand. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degree derivatives of Legendre functions at integer degree"};
    app.require_subcommand(1);

    std::string poly, format = "json", basis = "legendre", func, z_text, suite = "all", action, cache_dir;
    std::vector<std::string> grid;
    long n = 0, n_max = 0;
    std::optional<double> tol;
    std::uint64_t seed = 42;

    auto* coeffs = app.add_subcommand("coeffs", "Print exact coefficients of R_n, B_n or C_n");
    coeffs->add_option("--poly", poly, "R, B or C")->required()->check(CLI::IsMember({"R", "B", "C"}));
    coeffs->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
    coeffs->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    coeffs->add_option("--basis", basis, "legendre or monomial")->check(CLI::IsMember({"legendre", "monomial"}));

    auto* eval = app.add_subcommand("eval", "Evaluate one derivative at one point");
    eval->add_option("--func", func, "dP, d2P or dQ")->required()->check(CLI::IsMember({"dP", "d2P", "dQ"}));
    eval->add_option("--n", n, "degree (d2P accepts negative degrees)")->required();
    eval->add_option("--z", z_text, "x or re,im")->required();

    auto* table = app.add_subcommand("table", "CSV table over a grid of points and degrees 0..n-max");
    table->add_option("--func", func, "dP, d2P or dQ")->required()->check(CLI::IsMember({"dP", "d2P", "dQ"}));
    table->add_option("--n-max", n_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--grid", grid, "start:stop:count; give twice for real and imaginary axes")->required();
    table->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

    auto* ver = app.add_subcommand("verify", "Run an identity verification suite");
    ver->add_option("--suite", suite, "lown, sums, ode, recurrence, oracle or all")
        ->check(CLI::IsMember({"lown", "sums", "ode", "recurrence", "oracle", "all"}));
    ver->add_option("--n-max", n_max, "largest degree (suite default if omitted)")->check(CLI::NonNegativeNumber);
    ver->add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);
    ver->add_option("--seed", seed, "seed for random sample points");
    ver->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    auto* cache = app.add_subcommand("cache", "Manage the on-disk coefficient cache");
    cache->add_option("action", action, "build, clear or stat")
        ->required()
        ->check(CLI::IsMember({"build", "clear", "stat"}));
    cache->add_option("--n-max", n_max, "largest degree to build")->check(CLI::NonNegativeNumber);
    cache->add_option("--cache-dir", cache_dir, "cache directory (default from LND_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*coeffs)
            return cmd_coeffs(poly, n, format, basis, out);
        if (*eval)
            return cmd_eval(func, n, z_text, out);
        if (*table)
            return cmd_table(func, n_max, grid, out);
        if (*ver) {
            verify::Options opt;
            opt.n_max = ver->count("--n-max") ? n_max : -1;
            opt.tol = tol;
            opt.seed = seed;
            return cmd_verify(suite, opt, out);
        }
        if (cache->count("--n-max") == 0 && action == "build")
            throw UsageError("cache build requires --n-max");
        return cmd_cache(action, n_max, cache_dir, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return io;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return domain;
    }
}

} // namespace lnd::cli

#endif // LND_CLI_HPP
