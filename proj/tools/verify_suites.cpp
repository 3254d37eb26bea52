#include "verify_suites.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include <json.hpp>

#include "ulam/anticode.hpp"
#include "ulam/bounds.hpp"
#include "ulam/cover.hpp"
#include "ulam/distance.hpp"
#include "ulam/enumerate.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/graph.hpp"

namespace ulam::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kSuiteSeed = 0x1bd5a11ce5ull;

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::unchecked(std::move(v));
}

UndirectedGraph random_graph(int v, double edge_prob, std::mt19937_64& rng) {
    UndirectedGraph g(v);
    std::bernoulli_distribution coin(edge_prob);
    for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

struct Reporter {
    std::ostream& out;
    SuiteResult result;

    void check(const std::string& name, bool pass, ordered_json detail = {}) {
        ++result.checks;
        if (!pass) ++result.failures;
        ordered_json line;
        line["check"] = name;
        line["pass"] = pass;
        if (!detail.empty()) line["detail"] = std::move(detail);
        out << line.dump() << '\n';
    }

    void finding(const std::string& name, ordered_json detail) {
        ++result.findings;
        ordered_json line;
        line["finding"] = name;
        line["detail"] = std::move(detail);
        out << line.dump() << '\n';
    }
};

/// Full pairwise distance matrix for small n, one relabel+rank per pair.
std::vector<std::vector<int>> distance_matrix(int n) {
    const DistanceProfile profile = DistanceProfile::build(n);
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));
    std::vector<Permutation> perms;
    perms.reserve(total);
    enumerate_permutations(n, [&](const Permutation& p) { perms.push_back(p); });
    std::vector<std::vector<int>> d(total, std::vector<int>(total, 0));
    for (std::uint64_t i = 0; i < total; ++i) {
        const Permutation inv = inverse(perms[i]);
        for (std::uint64_t j = 0; j < total; ++j)
            d[i][j] = profile.distance_by_rank(rank_u64(relabel(inv, perms[j]).entries()));
    }
    return d;
}

}  // namespace

SuiteResult run_metric_suite(int n_max, std::ostream& out) {
    Reporter r{out};
    std::mt19937_64 rng(kSuiteSeed);

    // Exhaustive metric axioms for n <= min(5, n_max).
    for (int n = 1; n <= std::min(5, n_max); ++n) {
        const auto d = distance_matrix(n);
        const std::uint64_t total = d.size();
        bool identity_ok = true, symmetry_ok = true, triangle_ok = true, range_ok = true;
        std::vector<Permutation> perms;
        enumerate_permutations(n, [&](const Permutation& p) { perms.push_back(p); });
        const Permutation rev = Permutation::reversal(n);
        for (std::uint64_t i = 0; i < total; ++i)
            for (std::uint64_t j = 0; j < total; ++j) {
                if ((d[i][j] == 0) != (i == j)) identity_ok = false;
                if (d[i][j] != d[j][i]) symmetry_ok = false;
                if (d[i][j] < 0 || d[i][j] > n - 1) range_ok = false;
                if ((d[i][j] == n - 1) != (relabel(inverse(perms[i]), perms[j]) == rev))
                    range_ok = false;
            }
        for (std::uint64_t i = 0; i < total; ++i)
            for (std::uint64_t j = 0; j < total; ++j)
                for (std::uint64_t l = 0; l < total; ++l)
                    if (d[i][l] > d[i][j] + d[j][l]) triangle_ok = false;
        r.check("metric.identity.n" + std::to_string(n), identity_ok);
        r.check("metric.symmetry.n" + std::to_string(n), symmetry_ok);
        r.check("metric.triangle.n" + std::to_string(n), triangle_ok);
        r.check("metric.range.n" + std::to_string(n), range_ok);
    }

    // Random triples for 6 <= n <= min(10, n_max): axioms plus left-invariance.
    for (int n = 6; n <= std::min(10, n_max); ++n) {
        bool ok = true;
        for (int it = 0; it < 10'000 && ok; ++it) {
            const Permutation a = random_permutation(n, rng);
            const Permutation b = random_permutation(n, rng);
            const Permutation c = random_permutation(n, rng);
            const int dab = ulam_distance(a, b);
            if (dab != ulam_distance(b, a)) ok = false;
            if (ulam_distance(a, c) > dab + ulam_distance(b, c)) ok = false;
            if (dab < 0 || dab > n - 1) ok = false;
            if (ulam_distance(a, a) != 0) ok = false;
            if (ulam_distance(relabel(c, a), relabel(c, b)) != dab) ok = false;
        }
        r.check("metric.random_triples.n" + std::to_string(n), ok,
                ordered_json{{"triples", 10'000}});
    }

    // Oracle equivalence: exhaustive pairs for n <= min(5, n_max).
    for (int n = 1; n <= std::min(5, n_max); ++n) {
        bool ok = true;
        std::vector<Permutation> perms;
        enumerate_permutations(n, [&](const Permutation& p) { perms.push_back(p); });
        for (std::size_t i = 0; i < perms.size() && ok; ++i)
            for (std::size_t j = i; j < perms.size(); ++j)
                if (ulam_distance(perms[i], perms[j]) !=
                    ulam_distance_oracle(perms[i], perms[j])) {
                    ok = false;
                    break;
                }
        r.check("metric.oracle.exhaustive.n" + std::to_string(n), ok);
    }
    for (int n = 6; n <= std::min(10, n_max); ++n) {
        bool ok = true;
        for (int it = 0; it < 1000 && ok; ++it) {
            const Permutation a = random_permutation(n, rng);
            const Permutation b = random_permutation(n, rng);
            if (ulam_distance(a, b) != ulam_distance_oracle(a, b)) ok = false;
        }
        r.check("metric.oracle.random.n" + std::to_string(n), ok, ordered_json{{"pairs", 1000}});
    }

    // Deletion shape: |p - A| = n - |A| with surviving order preserved.
    {
        bool ok = true;
        for (int it = 0; it < 500 && ok; ++it) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const Permutation p = random_permutation(n, rng);
            SymbolSet a(n);
            for (int s = 1; s <= n; ++s)
                if (rng() % 2) a.add(s);
            const Sequence rest = delete_symbols(p, a);
            if (static_cast<int>(rest.size()) != n - a.cardinality()) ok = false;
            std::size_t cursor = 0;
            for (int x : p.entries())
                if (!a.contains(x) && (cursor >= rest.size() || rest[cursor++] != x)) ok = false;
        }
        r.check("metric.deletion_shape", ok);
    }

    ordered_json summary{{"suite", "metric"},
                         {"checks", r.result.checks},
                         {"failures", r.result.failures}};
    out << summary.dump() << '\n';
    return r.result;
}

SuiteResult run_lemma6_suite(int n_max, std::ostream& out) {
    Reporter r{out};
    std::mt19937_64 rng(kSuiteSeed + 6);

    const auto check_pair = [&](const Permutation& s, const Permutation& g, bool all_covers) {
        const UndirectedGraph graph = ulam_graph(s, g);
        if (graph != symmetric_difference(inversion_graph(s), inversion_graph(g))) return false;
        const MinCoverResult cover = min_vertex_cover(graph);
        if (cover.tau != ulam_distance(s, g)) return false;
        if (delete_symbols(s, cover.witness) != delete_symbols(g, cover.witness)) return false;
        if (all_covers) {
            // Both directions over all subsets: C covers G(s,g) iff the
            // deletions agree.
            const int n = s.size();
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                SymbolSet c(n);
                for (int b = 0; b < n; ++b)
                    if ((bits >> b) & 1) c.add(b + 1);
                const bool covers = is_vertex_cover(graph, c);
                const bool agrees = delete_symbols(s, c) == delete_symbols(g, c);
                if (covers != agrees) return false;
            }
        }
        return true;
    };

    for (int n = 1; n <= std::min(5, n_max); ++n) {
        bool ok = true;
        std::vector<Permutation> perms;
        enumerate_permutations(n, [&](const Permutation& p) { perms.push_back(p); });
        for (std::size_t i = 0; i < perms.size() && ok; ++i)
            for (std::size_t j = i; j < perms.size() && ok; ++j)
                ok = check_pair(perms[i], perms[j], true);
        r.check("lemma6.exhaustive.n" + std::to_string(n), ok);
    }
    for (int n = 6; n <= std::min(9, n_max); ++n) {
        bool ok = true;
        for (int it = 0; it < 500 && ok; ++it)
            ok = check_pair(random_permutation(n, rng), random_permutation(n, rng), false);
        r.check("lemma6.random.n" + std::to_string(n), ok, ordered_json{{"pairs", 500}});
    }

    ordered_json summary{{"suite", "lemma6"},
                         {"checks", r.result.checks},
                         {"failures", r.result.failures}};
    out << summary.dump() << '\n';
    return r.result;
}

SuiteResult run_lemma7_suite(int v_max, std::ostream& out) {
    Reporter r{out};
    std::mt19937_64 rng(kSuiteSeed + 7);
    const int cap = std::min(v_max, 12);

    bool census_ok = true, encoding_ok = true, attempts_ok = true;
    for (int it = 0; it < 200; ++it) {
        const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
        const double p = 0.1 + 0.8 * (static_cast<double>(rng() % 1000) / 1000.0);
        const UndirectedGraph g = random_graph(v, p, rng);
        const MinCoverResult mc = min_vertex_cover(g);

        // Brute-force census over all subsets.
        std::vector<std::vector<SymbolSet>> brute(static_cast<std::size_t>(v) + 1);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits) {
            SymbolSet c(v);
            for (int b = 0; b < v; ++b)
                if ((bits >> b) & 1) c.add(b + 1);
            if (is_vertex_cover(g, c)) brute[static_cast<std::size_t>(c.cardinality())].push_back(c);
        }
        for (auto& bucket : brute)
            std::sort(bucket.begin(), bucket.end(),
                      [](const SymbolSet& a, const SymbolSet& b) { return lex_less(a, b); });

        const std::vector<BigCount> census = cover_census(g);
        for (int m = 0; m <= v; ++m) {
            if (census[static_cast<std::size_t>(m)] != BigCount(brute[static_cast<std::size_t>(m)].size()))
                census_ok = false;
            if (m >= mc.tau &&
                census[static_cast<std::size_t>(m)] > cover_count_bound(mc.tau, v, m))
                census_ok = false;
            if (m >= mc.tau) {
                const CoverEncoding enc = covers_via_encoding(g, mc.witness, m);
                if (enc.covers != brute[static_cast<std::size_t>(m)]) encoding_ok = false;
                if (enc.attempted > cover_count_bound(mc.tau, v, m)) attempts_ok = false;
            } else if (!brute[static_cast<std::size_t>(m)].empty()) {
                census_ok = false;  // covers below tau cannot exist
            }
        }
    }
    r.check("lemma7.census_vs_bruteforce", census_ok, ordered_json{{"graphs", 200}});
    r.check("lemma7.encoding_equals_bruteforce", encoding_ok);
    r.check("lemma7.attempts_within_bound", attempts_ok);

    ordered_json summary{{"suite", "lemma7"},
                         {"checks", r.result.checks},
                         {"failures", r.result.failures}};
    out << summary.dump() << '\n';
    return r.result;
}

SuiteResult run_props_suite(int n_max, std::uint64_t budget, std::ostream& out) {
    Reporter r{out};
    const int cap = std::min(n_max, kSearchCap);

    // Exact table f_k(n) for n <= cap, k <= n; entries that hit the budget are
    // reported and skipped by the relation checks.
    std::map<std::pair<int, int>, BigCount> exact;
    for (int n = 1; n <= cap; ++n)
        for (int k = 0; k <= n; ++k) {
            const SearchReport rep = max_anticode(n, k, budget);
            if (rep.status == SearchStatus::kExact)
                exact[{n, k}] = rep.best_size;
            else
                r.finding("props.budget_exhausted",
                          ordered_json{{"n", n}, {"k", k}, {"best", to_decimal(rep.best_size)}});
        }

    // Pinned special values.
    bool f0_ok = true, f1_ok = true, top_ok = true, half_ok = true;
    for (int n = 1; n <= cap; ++n) {
        if (exact.count({n, 0}) && exact[{n, 0}] != 1) f0_ok = false;
        if (exact.count({n, 1}) && exact[{n, 1}] != n && n >= 1) f1_ok = false;
        if (n >= 1 && exact.count({n, n}) && exact[{n, n}] != factorial(static_cast<unsigned>(n)))
            top_ok = false;
        if (n >= 2 && exact.count({n, n - 1}) &&
            exact[{n, n - 1}] != factorial(static_cast<unsigned>(n)))
            top_ok = false;
        if (n >= 2 && exact.count({n, n - 2}) &&
            exact[{n, n - 2}] != factorial(static_cast<unsigned>(n)) / 2)
            half_ok = false;
    }
    r.check("props.f0_equals_1", f0_ok);
    r.check("props.f1_equals_n", f1_ok);
    r.check("props.fn_and_fn1_equal_nfact", top_ok);
    r.check("props.fn2_equals_half_nfact", half_ok);

    // Monotonicity relations over exact entries.
    bool mono_k = true, mono_n = true, mono_lift = true;
    for (const auto& [key, value] : exact) {
        const auto [n, k] = key;
        if (exact.count({n, k + 1}) && value > exact[{n, k + 1}]) mono_k = false;
        if (exact.count({n + 1, k}) && value > exact[{n + 1, k}]) mono_n = false;
        if (exact.count({n + 1, k + 1}) && BigCount(n + 1) * value > exact[{n + 1, k + 1}])
            mono_lift = false;
    }
    r.check("props.monotone_in_k", mono_k);
    r.check("props.monotone_in_n", mono_n);
    r.check("props.tensoring_inequality", mono_lift);

    // Dominance: falling factorial <= f <= min(ball size, intersection sum);
    // f <= the single-deletion bound for k >= 1.
    bool sandwich_ok = true, deletion_ok = true;
    for (const auto& [key, value] : exact) {
        const auto [n, k] = key;
        const unsigned un = static_cast<unsigned>(n);
        const unsigned uk = static_cast<unsigned>(std::min(k, n));
        if (value < falling_factorial(un, uk)) sandwich_ok = false;
        const int radius = std::min(k, n - 1);
        const BigCount ball =
            ball_size(BallSpec{n, Permutation::identity(n), radius < 0 ? 0 : radius});
        if (value > ball) sandwich_ok = false;
        if (value > intersection_bound_sum(un, uk)) sandwich_ok = false;
        if (k >= 1 && k <= n && value > single_deletion_bound(un, static_cast<unsigned>(k)))
            deletion_ok = false;
    }
    r.check("props.sandwich_bounds", sandwich_ok);
    r.check("props.single_deletion_bound", deletion_ok);

    ordered_json summary{{"suite", "props"},
                         {"checks", r.result.checks},
                         {"failures", r.result.failures},
                         {"findings", r.result.findings}};
    out << summary.dump() << '\n';
    return r.result;
}

SuiteResult run_conjecture_suite(int n_max, std::uint64_t budget, bool allow_large,
                                 std::ostream& out) {
    Reporter r{out};
    const int cap = std::min(n_max, allow_large ? kSearchCapOverride : kSearchCap);
    int equal = 0, open = 0;
    for (int n = 1; n <= cap; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            const ConjectureReport rep = verify_conjecture(n, k, budget, allow_large);
            ordered_json line{{"n", n},
                              {"k", k},
                              {"best_size", to_decimal(rep.search.best_size)},
                              {"conjectured", to_decimal(rep.search.conjectured)},
                              {"witness_is_cylinder", rep.search.witness_is_cylinder}};
            switch (rep.verdict) {
                case ConjectureVerdict::kEqual:
                    line["verdict"] = "equal";
                    ++equal;
                    break;
                case ConjectureVerdict::kCounterexample:
                    line["verdict"] = "counterexample";
                    r.finding("conjecture.counterexample", line);
                    break;
                case ConjectureVerdict::kInconclusive:
                    line["verdict"] = "inconclusive";
                    ++open;
                    break;
            }
            out << line.dump() << '\n';
            ++r.result.checks;
        }
    ordered_json summary{{"suite", "conjecture"}, {"checks", r.result.checks},
                         {"equal", equal},       {"inconclusive", open},
                         {"counterexamples", r.result.findings}, {"failures", r.result.failures}};
    out << summary.dump() << '\n';
    return r.result;
}

}  // namespace ulam::cli
