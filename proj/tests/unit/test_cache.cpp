#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "cache.hpp"
#include "ulam/bigcount.hpp"

using namespace ulam;
using namespace ulam::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ulam_cache_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

CacheEntry entry(int n, int k, const char* value, const char* status) {
    CacheEntry e;
    e.n = n;
    e.k = k;
    e.value = parse_decimal(value);
    e.status = status;
    e.source = "test 0.0.0";
    e.elapsed_ms = 1;
    e.created_at = current_utc_timestamp();
    return e;
}

}  // namespace

TEST_SUITE_BEGIN("cache");

TEST_CASE("round trip is bit exact") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    CacheEntry e = entry(4, 2, "12", "exact");
    e.witness = {"1,2,3,4", "2,1,3,4"};
    CHECK(cache.write(e) == CacheWriteOutcome::kWritten);
    const auto back = cache.read(4, 2);
    REQUIRE(back.has_value());
    CHECK(back->n == 4);
    CHECK(back->k == 2);
    CHECK(back->value == 12);
    CHECK(back->status == "exact");
    CHECK(back->witness == e.witness);
    CHECK(back->source == "test 0.0.0");
    // A value beyond 64 bits survives unchanged.
    CHECK(cache.write(entry(25, 25, "15511210043330985984000000", "lower_bound")) ==
          CacheWriteOutcome::kWritten);
    CHECK(to_decimal(cache.read(25, 25)->value) == "15511210043330985984000000");
}

TEST_CASE("lower bounds never replace exact entries") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    CHECK(cache.write(entry(5, 2, "20", "exact")) == CacheWriteOutcome::kWritten);
    CHECK(cache.write(entry(5, 2, "999", "lower_bound")) == CacheWriteOutcome::kKeptExisting);
    CHECK(cache.read(5, 2)->value == 20);
    CHECK(cache.read(5, 2)->status == "exact");

    // Improving lower bounds replace smaller ones; exact replaces any bound.
    CHECK(cache.write(entry(6, 2, "10", "lower_bound")) == CacheWriteOutcome::kWritten);
    CHECK(cache.write(entry(6, 2, "9", "lower_bound")) == CacheWriteOutcome::kKeptExisting);
    CHECK(cache.write(entry(6, 2, "11", "lower_bound")) == CacheWriteOutcome::kWritten);
    CHECK(cache.write(entry(6, 2, "30", "exact")) == CacheWriteOutcome::kWritten);
    CHECK(cache.read(6, 2)->status == "exact");
}

TEST_CASE("corrupt entries are quarantined, not fatal") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    CHECK(cache.write(entry(4, 1, "4", "exact")) == CacheWriteOutcome::kWritten);
    {
        std::ofstream bad(cache.path_for(3, 1));
        bad << "{ not json";
    }
    CHECK(!cache.read(3, 1).has_value());
    CHECK(fs::exists(fs::path(cache.path_for(3, 1).string() + ".corrupt")));
    CHECK(!fs::exists(cache.path_for(3, 1)));
    // The healthy entry is untouched.
    CHECK(cache.read(4, 1)->value == 4);

    // Bad status strings are rejected too.
    {
        std::ofstream bad(cache.path_for(2, 1));
        bad << R"({"n":2,"k":1,"value":"2","status":"approximate"})";
    }
    CHECK(!cache.read(2, 1).has_value());
}

TEST_SUITE_END();
