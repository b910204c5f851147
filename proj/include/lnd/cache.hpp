#ifndef LND_CACHE_HPP
#define LND_CACHE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "dpolys.hpp"
#include "errors.hpp"
#include "legendre_series.hpp"

namespace lnd::cache {

inline constexpr int format_version = 1;

/// $LND_CACHE_DIR, else $XDG_CACHE_HOME/lnd, else $HOME/.cache/lnd, else ./.lnd-cache.
inline std::filesystem::path default_directory()
{
    if (const char* dir = std::getenv("LND_CACHE_DIR"); dir && *dir)
        return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "lnd";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "lnd";
    return ".lnd-cache";
}

inline nlohmann::json series_to_json(const LegendreSeries& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.coeffs())
        out.push_back({c.numerator_str(), c.denominator_str()});
    return out;
}

inline LegendreSeries series_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw IoError("cache entry: series is not an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw IoError("cache entry: coefficient must be [\"num\", \"den\"]");
        try {
            coeffs.push_back(Rational::from_parts(pair[0].get<std::string>(), pair[1].get<std::string>()));
        } catch (const DomainError& e) {
            throw IoError(std::string("cache entry: ") + e.what());
        }
    }
    return LegendreSeries(std::move(coeffs));
}

inline nlohmann::json to_json(const CoeffTriple& t)
{
    return {{"n", t.degree},
            {"r", series_to_json(t.r)},
            {"b", series_to_json(t.b)},
            {"c", series_to_json(t.c)},
            {"format_version", format_version}};
}

/// Parses and structurally validates one entry; throws IoError when malformed.
inline CoeffTriple from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw IoError("cache entry: not a JSON object");
    if (!j.contains("format_version") || j["format_version"] != format_version)
        throw IoError("cache entry: unsupported format_version");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long>() < 0)
        throw IoError("cache entry: missing or invalid n");
    for (const char* key : {"r", "b", "c"})
        if (!j.contains(key))
            throw IoError(std::string("cache entry: missing ") + key);
    CoeffTriple t{j["n"].get<long>(), series_from_json(j["r"]), series_from_json(j["b"]),
                  series_from_json(j["c"])};
    try {
        check_triple(t);
    } catch (const InternalInconsistency& e) {
        throw IoError(std::string("cache entry fails validation: ") + e.what());
    }
    return t;
}

struct BuildSummary {
    std::size_t written = 0;
    std::size_t kept = 0;
};

struct CacheStat {
    std::size_t entries = 0;
    std::optional<long> max_n;
};

/// One JSON file per degree under a directory.
class CoeffCache {
public:
    explicit CoeffCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::filesystem::path entry_path(long n) const
    {
        return dir_ / ("coeffs_" + std::to_string(n) + ".json");
    }

    /// A valid entry for degree n, or nullopt if absent or unusable.
    std::optional<CoeffTriple> load(long n) const
    {
        std::ifstream in(entry_path(n));
        if (!in)
            return std::nullopt;
        try {
            const auto j = nlohmann::json::parse(in);
            CoeffTriple t = from_json(j);
            if (t.degree != n)
                return std::nullopt;
            return t;
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;
        } catch (const IoError&) {
            return std::nullopt;
        }
    }

    void store(const CoeffTriple& t) const
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec)
            throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
        const auto target = entry_path(t.degree);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out)
                throw IoError("cannot write " + tmp.string());
            out << to_json(t).dump() << '\n';
            if (!out)
                throw IoError("write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, target, ec);
        if (ec)
            throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
    }

    /// Writes entries 0..n_max; a present entry equal to the fresh one is kept as is.
    BuildSummary build(long n_max) const
    {
        BuildSummary summary;
        for (long n = 0; n <= n_max; ++n) {
            const CoeffTriple fresh = coeff_triple(n);
            if (auto existing = load(n); existing && *existing == fresh) {
                ++summary.kept;
                continue;
            }
            store(fresh);
            ++summary.written;
        }
        return summary;
    }

    /// Removes every entry file; returns the number removed.
    std::size_t clear() const
    {
        std::size_t removed = 0;
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec))
            return 0;
        for (const auto& item : std::filesystem::directory_iterator(dir_, ec)) {
            if (parse_entry_name(item.path()).has_value()) {
                std::filesystem::remove(item.path(), ec);
                if (ec)
                    throw IoError("cannot remove " + item.path().string() + ": " + ec.message());
                ++removed;
            }
        }
        if (ec)
            throw IoError("cannot list cache directory " + dir_.string() + ": " + ec.message());
        return removed;
    }

    CacheStat stat() const
    {
        CacheStat s;
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec))
            return s;
        for (const auto& item : std::filesystem::directory_iterator(dir_, ec)) {
            const auto n = parse_entry_name(item.path());
            if (!n || !load(*n))
                continue;
            ++s.entries;
            if (!s.max_n || *n > *s.max_n)
                s.max_n = *n;
        }
        if (ec)
            throw IoError("cannot list cache directory " + dir_.string() + ": " + ec.message());
        return s;
    }

private:
    static std::optional<long> parse_entry_name(const std::filesystem::path& p)
    {
        const std::string name = p.filename().string();
        const std::string prefix = "coeffs_";
        const std::string suffix = ".json";
        if (name.size() <= prefix.size() + suffix.size() || name.rfind(prefix, 0) != 0 ||
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
            return std::nullopt;
        const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
        if (digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stol(digits);
    }

    std::filesystem::path dir_;
};

} // namespace lnd::cache

#endif // LND_CACHE_HPP
