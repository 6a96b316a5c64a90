#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include <unistd.h>

#include "lmn/integer.hpp"
#include "lmn/rank_sequence.hpp"
#include "lmn/theorem.hpp"

namespace lmn {

/// On-disk cache of Gaussian coefficient tables, one JSON file per (m, n).
///
/// The cache is strictly an optimization: every entry re-validates on load
/// (format version, dimensions, symmetry, and the binomial coefficient sum),
/// and anything absent, unparsable, or inconsistent is recomputed and
/// rewritten. Writers stage to a per-process temp file and rename it into
/// place, so concurrent processes sharing a directory never observe torn
/// entries.
class GaussianCache {
  public:
    static constexpr int kFormatVersion = 1;

    explicit GaussianCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// $LMN_CACHE_DIR if set; otherwise a per-user cache directory; otherwise
    /// a directory under the system temp path.
    static std::filesystem::path default_dir() {
        if (const char* env = std::getenv("LMN_CACHE_DIR"); env && *env) return env;
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
            return std::filesystem::path(xdg) / "lmn";
        if (const char* home = std::getenv("HOME"); home && *home)
            return std::filesystem::path(home) / ".cache" / "lmn";
        return std::filesystem::temp_directory_path() / "lmn-cache";
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path entry_path(int m, int n) const {
        return dir_ / ("qbinom-" + std::to_string(m) + "-" + std::to_string(n) + ".json");
    }

    /// Validated load; returns nullopt for anything that cannot be trusted.
    std::optional<RankSequence> load(int m, int n) const {
        if (m < 0 || n < 0) return std::nullopt;
        std::ifstream in(entry_path(m, n));
        if (!in) return std::nullopt;
        const nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
        if (doc.value("format_version", -1) != kFormatVersion) return std::nullopt;
        if (doc.value("m", -1) != m || doc.value("n", -1) != n) return std::nullopt;
        const auto it = doc.find("coeffs");
        if (it == doc.end() || !it->is_array()) return std::nullopt;
        if (it->size() != static_cast<std::size_t>(m) * n + 1) return std::nullopt;

        std::vector<Integer> coeffs;
        coeffs.reserve(it->size());
        try {
            for (const auto& c : *it) {
                if (!c.is_string()) return std::nullopt;
                coeffs.emplace_back(c.get<std::string>());
            }
            RankSequence seq(0, std::move(coeffs));
            if (seq.offset() != 0 || seq.size() != static_cast<std::size_t>(m) * n + 1)
                return std::nullopt;
            if (!is_symmetric(seq) || seq.coefficient_sum() != binomial(m + n, m))
                return std::nullopt;
            return seq;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    /// Best-effort write via temp file + atomic rename; failures are swallowed
    /// (a cache that cannot be written is just a cache that is always cold).
    void store(int m, int n, const RankSequence& seq) const {
        try {
            std::filesystem::create_directories(dir_);
            nlohmann::ordered_json doc;
            doc["format_version"] = kFormatVersion;
            doc["m"] = m;
            doc["n"] = n;
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& c : seq.coeffs()) coeffs.push_back(c.str());
            doc["coeffs"] = std::move(coeffs);

            static std::atomic<unsigned> counter{0};
            const std::filesystem::path tmp =
                entry_path(m, n).string() + ".tmp." + std::to_string(::getpid()) + "." +
                std::to_string(counter.fetch_add(1));
            {
                std::ofstream out(tmp);
                if (!out) return;
                out << doc.dump(2) << "\n";
                if (!out) return;
            }
            std::filesystem::rename(tmp, entry_path(m, n));
        } catch (const std::exception&) {
            // advisory cache: computation already succeeded, keep the result
        }
    }

    /// Load-or-compute-and-store.
    RankSequence get(int m, int n) const {
        if (auto cached = load(m, n)) return *std::move(cached);
        RankSequence seq = gaussian(m, n);
        store(m, n, seq);
        return seq;
    }

    /// Adapter for the theorem module's pluggable Gaussian source.
    GaussianFn provider() const {
        return [cache = *this](int m, int n) { return cache.get(m, n); };
    }

  private:
    std::filesystem::path dir_;
};

}  // namespace lmn
