// Command-line front end: every subcommand maps onto one library operation,
// numeric results are emitted as JSON (arbitrary-precision values as decimal
// strings, never floats), and search results can persist to a per-(n,k) JSON
// cache.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "verify_suites.hpp"

#include "ulam/anticode.hpp"
#include "ulam/bounds.hpp"
#include "ulam/cover.hpp"
#include "ulam/distance.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/errors.hpp"
#include "ulam/graph.hpp"
#include "ulam/parallel.hpp"
#include "ulam/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ulam;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitArgument = 2;
constexpr int kExitBudget = 3;

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }

/// ULAM_CACHE_DIR overrides any --cache-dir / -o value.
std::optional<std::string> resolve_cache_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("ULAM_CACHE_DIR"); env != nullptr && *env != '\0')
        return std::string(env);
    if (!flag_value.empty()) return flag_value;
    return std::nullopt;
}

std::string status_string(SearchStatus s) {
    return s == SearchStatus::kExact ? "exact" : "lower_bound";
}

ordered_json search_report_json(const SearchReport& report, bool with_witness, bool with_stats) {
    ordered_json j;
    j["n"] = report.n;
    j["k"] = report.k;
    if (report.k_effective != report.k) j["k_effective"] = report.k_effective;
    j["best_size"] = to_decimal(report.best_size);
    j["status"] = status_string(report.status);
    j["conjectured_max"] = to_decimal(report.conjectured);
    j["matches_conjecture"] = report.matches_conjecture;
    j["witness_is_cylinder"] = report.witness_is_cylinder;
    if (with_witness) {
        std::vector<std::string> members;
        for (const auto& p : report.witness.sorted_members()) members.push_back(p.to_string());
        j["witness"] = members;
    }
    if (with_stats) {
        j["elapsed_ms"] = report.elapsed_ms;
        j["nodes_explored"] = report.nodes_explored;
    }
    return j;
}

void cache_search_report(const std::optional<std::string>& dir, const SearchReport& report,
                         const std::string& command) {
    if (!dir) return;
    cli::ResultCache cache(*dir);
    cli::CacheEntry entry;
    entry.n = report.n;
    entry.k = report.k;
    entry.value = report.best_size;
    entry.status = report.status == SearchStatus::kExact ? "exact" : "lower_bound";
    for (const auto& p : report.witness.sorted_members()) entry.witness.push_back(p.to_string());
    entry.source = command + " " + kVersion;
    entry.elapsed_ms = report.elapsed_ms;
    entry.created_at = cli::current_utc_timestamp();
    cache.write(entry);
}

struct TableOptions {
    int n_max = 0;
    int k_max = 0;
    std::string out_dir;
    std::string format = "jsonl";
    std::uint64_t budget = kDefaultSearchBudget;
    bool allow_large = false;
};

int run_table(const TableOptions& opt, const std::optional<std::string>& cache_dir) {
    if (!cache_dir) throw ArgumentError("table requires -o DIR (or ULAM_CACHE_DIR)");
    cli::ResultCache cache(*cache_dir);
    const bool csv = opt.format == "csv";
    if (csv) std::cout << "n,k,value,status\n";

    std::map<std::pair<int, int>, BigCount> exact;
    for (int n = 1; n <= opt.n_max; ++n) {
        for (int k = 0; k <= std::min(opt.k_max, n); ++k) {
            BigCount value;
            std::string status;
            if (const auto hit = cache.read(n, k); hit && hit->status == "exact") {
                value = hit->value;
                status = hit->status;
            } else {
                const SearchReport report = max_anticode(n, k, opt.budget, opt.allow_large);
                value = report.best_size;
                status = status_string(report.status);
                cache_search_report(cache_dir, report, "ulam table");
            }
            if (status == "exact") exact[{n, k}] = value;
            if (csv) {
                std::cout << n << ',' << k << ',' << to_decimal(value) << ',' << status << '\n';
            } else {
                emit(ordered_json{
                    {"n", n}, {"k", k}, {"value", to_decimal(value)}, {"status", status}});
            }
        }
    }

    // Post-hoc monotonicity audit over the exact entries.
    int violations = 0;
    for (const auto& [key, value] : exact) {
        const auto [n, k] = key;
        const auto up_k = exact.find({n, k + 1});
        const auto up_n = exact.find({n + 1, k});
        const auto lift = exact.find({n + 1, k + 1});
        if (up_k != exact.end() && value > up_k->second) ++violations;
        if (up_n != exact.end() && value > up_n->second) ++violations;
        if (lift != exact.end() && BigCount(n + 1) * value > lift->second) ++violations;
    }
    const ordered_json summary{{"check", "monotonicity"},
                               {"exact_entries", exact.size()},
                               {"violations", violations}};
    if (csv)
        std::cerr << summary.dump() << '\n';
    else
        emit(summary);
    return violations == 0 ? kExitOk : kExitFailure;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact combinatorics for the Ulam (deletion) metric on permutations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("ulam ") + kVersion);

    unsigned threads = 0;
    std::string cache_dir_flag;
    app.add_option("--threads", threads, "Worker threads for full-space scans (0 = all cores)");
    app.add_option("--cache-dir", cache_dir_flag,
                   "Results cache directory (ULAM_CACHE_DIR overrides)");

    // dist
    auto* dist = app.add_subcommand("dist", "Ulam distance between two permutations");
    std::string dist_a, dist_b, dist_graph;
    bool dist_oracle = false;
    dist->add_option("a", dist_a, "first permutation")->required();
    dist->add_option("b", dist_b, "second permutation")->required();
    dist->add_flag("--oracle", dist_oracle, "use the deletion-set search instead of the LIS route");
    dist->add_option("--graph", dist_graph, "write the difference graph as an edge list FILE");

    // ball
    auto* ball = app.add_subcommand("ball", "Exact ball size around a center");
    int ball_n = 0, ball_r = 0;
    std::string ball_center;
    bool ball_list = false, ball_allow_large = false;
    ball->add_option("-n", ball_n, "number of symbols")->required();
    ball->add_option("-r", ball_r, "radius")->required();
    ball->add_option("--center", ball_center, "center permutation (default identity)");
    ball->add_flag("--members", ball_list, "stream members as JSON lines");
    ball->add_flag("--allow-large", ball_allow_large, "permit n = 12..13 scans");

    // intersect
    auto* intersect = app.add_subcommand("intersect", "Exact two-ball intersection size");
    std::string int_a, int_b;
    int int_k = 0;
    bool int_list = false, int_allow_large = false;
    intersect->add_option("a", int_a)->required();
    intersect->add_option("b", int_b)->required();
    intersect->add_option("-k", int_k, "common radius")->required();
    intersect->add_flag("--members", int_list, "stream members as JSON lines");
    intersect->add_flag("--allow-large", int_allow_large, "permit n = 12..13 scans");

    // cover
    auto* cover = app.add_subcommand("cover", "Vertex cover computations on an edge list");
    std::string cover_file;
    int cover_m = -1;
    bool cover_min = false;
    cover->add_option("--edges", cover_file, "edge list file: 'n m' header then 'u v' lines")
        ->required();
    cover->add_flag("--min", cover_min, "minimum vertex cover with witness");
    cover->add_option("--count", cover_m, "count vertex covers of this size");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "All closed-form bounds for (n, k)");
    int bounds_n = 0, bounds_k = 0;
    std::string bounds_c;
    bounds->add_option("-n", bounds_n)->required();
    bounds->add_option("-k", bounds_k)->required();
    bounds->add_option("-C", bounds_c,
                       "rational constant for the 2^(k+C k^(2/3)) bound (e.g. 1, 3/4, 0.5)");

    // search
    auto* search = app.add_subcommand("search", "Exact maximum anticode size f_k(n)");
    int search_n = 0, search_k = 0;
    std::uint64_t search_budget = kDefaultSearchBudget;
    bool search_witness = false, search_stats = false, search_allow_large = false;
    search->add_option("-n", search_n)->required();
    search->add_option("-k", search_k)->required();
    search->add_option("--budget", search_budget, "node budget for the clique search");
    search->add_flag("--witness", search_witness, "include the witness family");
    search->add_flag("--stats", search_stats, "include elapsed_ms and nodes_explored");
    search->add_flag("--allow-large", search_allow_large, "permit n = 7");

    // verify
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    std::string suite;
    int verify_n_max = -1;
    std::uint64_t verify_budget = kDefaultSearchBudget;
    bool verify_allow_large = false;
    verify->add_option("--suite", suite, "one of: metric, lemma6, lemma7, props, conjecture")
        ->required()
        ->check(CLI::IsMember({"metric", "lemma6", "lemma7", "props", "conjecture"}));
    verify->add_option("--n-max", verify_n_max, "largest n (suite-specific default)");
    verify->add_option("--budget", verify_budget, "search node budget where applicable");
    verify->add_flag("--allow-large", verify_allow_large, "permit n = 7 searches");

    // table
    auto* table = app.add_subcommand("table", "Fill the f_k(n) cache and audit monotonicity");
    TableOptions topt;
    table->add_option("--n-max", topt.n_max)->required();
    table->add_option("--k-max", topt.k_max)->required();
    table->add_option("-o", topt.out_dir, "output/cache directory");
    table->add_option("--format", topt.format)->check(CLI::IsMember({"jsonl", "csv"}));
    table->add_option("--budget", topt.budget, "node budget per entry");
    table->add_flag("--allow-large", topt.allow_large, "permit n = 7");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgument;
    }

    set_thread_count(threads);
    const auto cache_dir = resolve_cache_dir(cache_dir_flag);

    if (dist->parsed()) {
        const Permutation a = Permutation::parse(dist_a);
        const Permutation b = Permutation::parse(dist_b);
        const int d = dist_oracle ? ulam_distance_oracle(a, b) : ulam_distance(a, b);
        if (!dist_graph.empty()) {
            std::ofstream out(dist_graph);
            if (!out) throw UlamError("cannot write " + dist_graph);
            write_edge_list(out, ulam_graph(a, b));
        }
        emit(ordered_json{{"distance", d}});
        return kExitOk;
    }

    if (ball->parsed()) {
        const Permutation center =
            ball_center.empty() ? Permutation::identity(ball_n) : Permutation::parse(ball_center);
        const BallSpec spec{ball_n, center, ball_r};
        if (ball_list)
            ball_members(spec, [&](const Permutation& p) {
                emit(ordered_json{{"member", p.to_string()}});
            }, ball_allow_large);
        const BigCount size = ball_size(spec, ball_allow_large);
        emit(ordered_json{{"n", ball_n}, {"radius", ball_r}, {"size", to_decimal(size)}});
        return kExitOk;
    }

    if (intersect->parsed()) {
        const Permutation a = Permutation::parse(int_a);
        const Permutation b = Permutation::parse(int_b);
        if (int_list)
            ball_intersection_members(a, b, int_k, [&](const Permutation& p) {
                emit(ordered_json{{"member", p.to_string()}});
            }, int_allow_large);
        const BigCount size = ball_intersection(a, b, int_k, int_allow_large);
        emit(ordered_json{
            {"n", a.size()}, {"k", int_k}, {"size", to_decimal(size)}});
        return kExitOk;
    }

    if (cover->parsed()) {
        if (cover_min == (cover_m >= 0))
            throw ArgumentError("cover needs exactly one of --min or --count M");
        std::ifstream in(cover_file);
        if (!in) throw UlamError("cannot read " + cover_file);
        const UndirectedGraph g = read_edge_list(in);
        if (cover_min) {
            const MinCoverResult mc = min_vertex_cover(g);
            emit(ordered_json{{"n", g.vertex_count()},
                              {"edges", g.edge_count()},
                              {"tau", mc.tau},
                              {"witness", mc.witness.to_vector()}});
        } else {
            const BigCount count = count_vertex_covers(g, cover_m);
            emit(ordered_json{{"n", g.vertex_count()},
                              {"edges", g.edge_count()},
                              {"m", cover_m},
                              {"count", to_decimal(count)}});
        }
        return kExitOk;
    }

    if (bounds->parsed()) {
        if (bounds_n < 0 || bounds_k < 0 || bounds_k > bounds_n)
            throw ArgumentError("bounds requires 0 <= k <= n");
        const auto un = static_cast<unsigned>(bounds_n);
        const auto uk = static_cast<unsigned>(bounds_k);
        ordered_json j{{"n", bounds_n}, {"k", bounds_k}};
        j["conjectured_max"] = to_decimal(falling_factorial(un, uk));
        j["ball_size_upper"] = to_decimal(ball_size_upper(un, uk));
        if (uk >= 1) j["single_deletion_bound"] = to_decimal(single_deletion_bound(un, uk));
        j["intersection_bound_sum"] = to_decimal(intersection_bound_sum(un, uk));
        if (!bounds_c.empty()) {
            const Rational c = Rational::parse(bounds_c);
            j["c"] = bounds_c;
            j["anticode_size_bound"] = to_decimal(anticode_size_bound(un, uk, c));
        }
        emit(j);
        return kExitOk;
    }

    if (search->parsed()) {
        const SearchReport report =
            max_anticode(search_n, search_k, search_budget, search_allow_large);
        emit(search_report_json(report, search_witness, search_stats));
        cache_search_report(cache_dir, report, "ulam search");
        return report.status == SearchStatus::kExact ? kExitOk : kExitBudget;
    }

    if (verify->parsed()) {
        cli::SuiteResult result;
        if (suite == "metric")
            result = cli::run_metric_suite(verify_n_max < 0 ? 10 : verify_n_max, std::cout);
        else if (suite == "lemma6")
            result = cli::run_lemma6_suite(verify_n_max < 0 ? 9 : verify_n_max, std::cout);
        else if (suite == "lemma7")
            result = cli::run_lemma7_suite(verify_n_max < 0 ? 12 : verify_n_max, std::cout);
        else if (suite == "props")
            result = cli::run_props_suite(verify_n_max < 0 ? 5 : verify_n_max, verify_budget,
                                          std::cout);
        else
            result = cli::run_conjecture_suite(verify_n_max < 0 ? 5 : verify_n_max, verify_budget,
                                               verify_allow_large, std::cout);
        return result.failures == 0 ? kExitOk : kExitFailure;
    }

    if (table->parsed()) {
        std::optional<std::string> dir = cache_dir;
        if (const char* env = std::getenv("ULAM_CACHE_DIR"); env == nullptr || *env == '\0')
            if (!topt.out_dir.empty()) dir = topt.out_dir;
        return run_table(topt, dir);
    }

    return kExitArgument;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
