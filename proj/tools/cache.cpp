#include "cache.hpp"

#include <ctime>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "ulam/errors.hpp"

namespace ulam::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw UlamError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path ResultCache::path_for(int n, int k) const {
    return dir_ / ("f_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json");
}

namespace {

ordered_json entry_to_json(const CacheEntry& e) {
    ordered_json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["value"] = to_decimal(e.value);
    j["status"] = e.status;
    if (!e.witness.empty()) j["witness"] = e.witness;
    j["source"] = e.source;
    j["elapsed_ms"] = e.elapsed_ms;
    j["created_at"] = e.created_at;
    return j;
}

CacheEntry entry_from_json(const ordered_json& j) {
    CacheEntry e;
    e.n = j.at("n").get<int>();
    e.k = j.at("k").get<int>();
    e.value = parse_decimal(j.at("value").get<std::string>());
    e.status = j.at("status").get<std::string>();
    if (e.status != "exact" && e.status != "lower_bound")
        throw ParseError("unknown cache status '" + e.status + "'");
    if (j.contains("witness")) e.witness = j.at("witness").get<std::vector<std::string>>();
    e.source = j.value("source", std::string{});
    e.elapsed_ms = j.value("elapsed_ms", std::uint64_t{0});
    e.created_at = j.value("created_at", std::string{});
    return e;
}

}  // namespace

std::optional<CacheEntry> ResultCache::read(int n, int k) const {
    const fs::path path = path_for(n, k);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        const auto j = ordered_json::parse(in);
        return entry_from_json(j);
    } catch (const std::exception& e) {
        // Quarantine and carry on; other entries stay usable.
        std::error_code ec;
        fs::rename(path, fs::path(path.string() + ".corrupt"), ec);
        std::cerr << "warning: quarantined corrupt cache entry " << path.string() << " ("
                  << e.what() << ")\n";
        return std::nullopt;
    }
}

CacheWriteOutcome ResultCache::write(const CacheEntry& entry) const {
    const auto existing = read(entry.n, entry.k);
    if (existing) {
        const bool old_exact = existing->status == "exact";
        const bool new_exact = entry.status == "exact";
        if (old_exact && !new_exact) return CacheWriteOutcome::kKeptExisting;
        if (!old_exact && !new_exact && entry.value <= existing->value)
            return CacheWriteOutcome::kKeptExisting;
        if (old_exact && new_exact && entry.value != existing->value)
            std::cerr << "warning: exact cache entry for (n=" << entry.n << ", k=" << entry.k
                      << ") changed value from " << to_decimal(existing->value) << " to "
                      << to_decimal(entry.value) << "\n";
    }
    const fs::path path = path_for(entry.n, entry.k);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw UlamError("cannot write cache file " + tmp.string());
        out << entry_to_json(entry).dump() << '\n';
    }
    fs::rename(tmp, path);
    return CacheWriteOutcome::kWritten;
}

std::string current_utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", &tm);
    return buf;
}

}  // namespace ulam::cli
