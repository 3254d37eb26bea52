#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ulam/bigcount.hpp"

namespace ulam::cli {

/// One cached search result, keyed by (n, k); serialized as a single JSON
/// object per file.
struct CacheEntry {
    int n = 0;
    int k = 0;
    BigCount value;
    std::string status;  // "exact" | "lower_bound"
    std::vector<std::string> witness;
    std::string source;
    std::uint64_t elapsed_ms = 0;
    std::string created_at;  // ISO 8601 UTC
};

enum class CacheWriteOutcome { kWritten, kKeptExisting };

/// One JSON file per (n, k) under a directory.  Writes are atomic
/// (temp + rename) and replace-on-improve: an exact entry is never replaced
/// by a lower bound, and a lower bound is only replaced by an exact entry or
/// a larger lower bound.  Corrupt files are quarantined (renamed *.corrupt)
/// with a warning instead of crashing.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(int n, int k) const;

    std::optional<CacheEntry> read(int n, int k) const;
    CacheWriteOutcome write(const CacheEntry& entry) const;

private:
    std::filesystem::path dir_;
};

std::string current_utc_timestamp();

}  // namespace ulam::cli
