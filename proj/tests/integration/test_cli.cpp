// End-to-end tests against the built `ulam` binary (path in $ULAM_CLI).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("ULAM_CLI");
    REQUIRE_MESSAGE(env != nullptr, "ULAM_CLI must point at the built binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json first_line_json(const std::string& out) {
    const auto nl = out.find('\n');
    return json::parse(out.substr(0, nl));
}

json last_line_json(const std::string& out) {
    auto end = out.find_last_not_of('\n');
    REQUIRE(end != std::string::npos);
    auto start = out.rfind('\n', end);
    return json::parse(out.substr(start == std::string::npos ? 0 : start + 1,
                                  end - (start == std::string::npos ? 0 : start + 1) + 1));
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ulam_cli_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("dist") {
    // The deletion-set oracle gives 2 here: removing {1,4} leaves 523 in both.
    auto r = run("dist 45231 15243");
    CHECK(r.exit_code == 0);
    CHECK(first_line_json(r.out)["distance"] == 2);
    CHECK(run("dist 45231 15243 --oracle").out == r.out);
    CHECK(first_line_json(run("dist 1,2,3,4,5 5,4,3,2,1").out)["distance"] == 4);
}

TEST_CASE("dist graph export feeds cover") {
    TempDir tmp;
    const std::string graph = (tmp.path / "g.edges").string();
    auto r = run("dist 132 312 --graph " + graph);
    CHECK(r.exit_code == 0);
    std::ifstream in(graph);
    std::string header;
    std::getline(in, header);
    CHECK(header == "3 1");

    auto cover = run("cover --edges " + graph + " --min");
    CHECK(cover.exit_code == 0);
    const json j = first_line_json(cover.out);
    CHECK(j["tau"] == 1);
    CHECK(j["witness"].size() == 1);

    auto count = run("cover --edges " + graph + " --count 1");
    CHECK(first_line_json(count.out)["count"] == "1");
}

TEST_CASE("ball") {
    auto r = run("ball -n 3 -r 1");
    CHECK(r.exit_code == 0);
    const json j = first_line_json(r.out);
    CHECK(j["size"] == "5");

    auto members = run("ball -n 3 -r 1 --members");
    CHECK(members.exit_code == 0);
    int count = 0;
    std::size_t pos = 0;
    while ((pos = members.out.find("member", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 5);

    auto centered = run("ball -n 4 -r 2 --center 2,1,4,3");
    CHECK(first_line_json(centered.out)["size"] ==
          first_line_json(run("ball -n 4 -r 2").out)["size"]);
}

TEST_CASE("intersect") {
    auto r = run("intersect 123 213 -k 1");
    CHECK(r.exit_code == 0);
    const json j = first_line_json(r.out);
    CHECK(j["size"] == "4");
    CHECK(j["n"] == 3);
}

TEST_CASE("bounds") {
    auto r = run("bounds -n 3 -k 1");
    CHECK(r.exit_code == 0);
    const json j = first_line_json(r.out);
    CHECK(j["intersection_bound_sum"] == "22");
    CHECK(j["conjectured_max"] == "3");
    CHECK(j["ball_size_upper"] == "9");
    CHECK(j["single_deletion_bound"] == "12");

    const json with_c = first_line_json(run("bounds -n 6 -k 3 -C 1").out);
    CHECK(with_c["anticode_size_bound"] == "4080");
    const json k0 = first_line_json(run("bounds -n 5 -k 0").out);
    CHECK(!k0.contains("single_deletion_bound"));
}

TEST_CASE("search") {
    auto r = run("search -n 4 -k 2");
    CHECK(r.exit_code == 0);
    const json j = first_line_json(r.out);
    CHECK(j["best_size"] == "12");
    CHECK(j["status"] == "exact");
    CHECK(j["matches_conjecture"] == true);
    CHECK(!j.contains("elapsed_ms"));  // stdout stays deterministic

    auto witness = run("search -n 3 -k 1 --witness");
    const json jw = first_line_json(witness.out);
    CHECK(jw["witness"].size() == 3);

    auto capped = run("search -n 5 -k 2 --budget 1");
    CHECK(capped.exit_code == 3);
    CHECK(first_line_json(capped.out)["status"] == "lower_bound");
}

TEST_CASE("exit codes") {
    CHECK(run("dist 123").exit_code == 2);          // missing argument
    CHECK(run("dist 123 12,3x").exit_code == 2);    // parse error
    CHECK(run("dist 123 1234").exit_code == 2);     // size mismatch
    CHECK(run("nonsense").exit_code == 2);          // unknown subcommand
    CHECK(run("ball -n 14 -r 1").exit_code == 3);   // enumeration cap
    CHECK(run("search -n 9 -k 1").exit_code == 3);  // search cap
    CHECK(run("cover --edges /nonexistent --min").exit_code == 1);
    CHECK(run("--version").exit_code == 0);
}

TEST_CASE("table fills, resumes, and audits the cache") {
    TempDir tmp;
    const std::string dir = (tmp.path / "cache").string();
    auto r = run("table --n-max 4 --k-max 4 -o " + dir);
    CHECK(r.exit_code == 0);
    const json summary = last_line_json(r.out);
    CHECK(summary["check"] == "monotonicity");
    CHECK(summary["violations"] == 0);
    CHECK(fs::exists(fs::path(dir) / "f_n4_k2.json"));

    // Cached values are reused (and survive bit-exact).
    {
        std::ifstream in(fs::path(dir) / "f_n4_k2.json");
        const json e = json::parse(in);
        CHECK(e["value"] == "12");
        CHECK(e["status"] == "exact");
    }
    auto again = run("table --n-max 4 --k-max 4 -o " + dir);
    CHECK(again.exit_code == 0);

    // CSV export.
    auto csv = run("table --n-max 3 --k-max 3 -o " + dir + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,k,value,status\n", 0) == 0);
    CHECK(csv.out.find("3,1,3,exact") != std::string::npos);
}

TEST_CASE("ULAM_CACHE_DIR overrides the flag") {
    TempDir tmp;
    const std::string env_dir = (tmp.path / "env").string();
    const std::string flag_dir = (tmp.path / "flag").string();
    const std::string cmd = "ULAM_CACHE_DIR=" + env_dir + " " + cli_path() +
                            " --cache-dir " + flag_dir + " search -n 3 -k 1 >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(fs::path(env_dir) / "f_n3_k1.json"));
    CHECK(!fs::exists(fs::path(flag_dir) / "f_n3_k1.json"));
}

TEST_CASE("verify props suite exercises the pinned special values") {
    auto r = run("verify --suite props --n-max 5");
    CHECK(r.exit_code == 0);
    const json summary = last_line_json(r.out);
    CHECK(summary["suite"] == "props");
    CHECK(summary["failures"] == 0);
}

TEST_CASE("verify conjecture suite reports verdicts") {
    auto r = run("verify --suite conjecture --n-max 4");
    CHECK(r.exit_code == 0);
    const json summary = last_line_json(r.out);
    CHECK(summary["counterexamples"] == 0);
    CHECK(summary["inconclusive"] == 0);
}

TEST_SUITE_END();
