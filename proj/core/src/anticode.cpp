#include "ulam/anticode.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "ulam/bounds.hpp"
#include "ulam/clique.hpp"
#include "ulam/cover.hpp"
#include "ulam/distance.hpp"
#include "ulam/enumerate.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/errors.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

void Family::insert(const Permutation& p) {
    if (p.size() != n_)
        throw SizeMismatchError("family holds permutations of " + std::to_string(n_) +
                                " symbols, got " + std::to_string(p.size()));
    members_.insert(p);
}

std::vector<Permutation> Family::sorted_members() const {
    std::vector<Permutation> out(members_.begin(), members_.end());
    std::sort(out.begin(), out.end());
    return out;
}

int family_diameter(const Family& f) {
    if (f.empty()) throw ArgumentError("diameter of an empty family");
    const auto members = f.sorted_members();
    int diameter = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            diameter = std::max(diameter, ulam_distance(members[i], members[j]));
    return diameter;
}

Family cylinder(int n, const SymbolSet& deleted, const Permutation& anchor) {
    if (anchor.size() != n || deleted.universe() != n)
        throw SizeMismatchError("cylinder: universe mismatch");
    Family out(n);
    const Sequence base = delete_symbols(anchor, deleted);
    const std::vector<int> symbols = deleted.to_vector();

    // Insert the deleted symbols one at a time, in every position.  Each
    // placement vector yields a distinct member, n!/(n-|A|)! in total.
    std::vector<std::vector<int>> frontier{base};
    for (int s : symbols) {
        std::vector<std::vector<int>> next;
        next.reserve(frontier.size() * (base.size() + 2));
        for (const auto& seq : frontier) {
            for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
                std::vector<int> grown;
                grown.reserve(seq.size() + 1);
                grown.insert(grown.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(pos));
                grown.push_back(s);
                grown.insert(grown.end(), seq.begin() + static_cast<std::ptrdiff_t>(pos), seq.end());
                next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    for (auto& seq : frontier) out.insert(Permutation::unchecked(std::move(seq)));
    return out;
}

std::optional<CylinderWitness> is_cylinder(const Family& f) {
    if (f.empty()) throw ArgumentError("is_cylinder of an empty family");
    const int n = f.n();
    const auto members = f.sorted_members();

    if (members.size() == 1) return CylinderWitness{SymbolSet(n), members.front()};

    // |A| is forced: cylinder sizes are the falling factorials.
    int a = -1;
    for (int cand = 0; cand <= n; ++cand) {
        if (falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(cand)) ==
            BigCount(members.size())) {
            a = cand;
            break;
        }
    }
    if (a < 0) return std::nullopt;

    // All members agree after deleting A iff A covers every difference graph
    // against a fixed reference, hence their union.
    UndirectedGraph unioned(n);
    for (std::size_t i = 1; i < members.size(); ++i) {
        const UndirectedGraph diff = ulam_graph(members[0], members[i]);
        diff.for_each_edge([&](int u, int v) { unioned.add_edge(u, v); });
    }

    std::uint64_t nodes = 0;
    if (!cover_exists(unioned, SymbolSet::full(n), a, nodes, kDefaultCoverBudget))
        return std::nullopt;
    const SymbolSet witness = lex_least_cover_of_size(unioned, a, nodes, kDefaultCoverBudget);
    return CylinderWitness{witness, members.front()};
}

Family tensor_lift(const Family& f) {
    if (f.empty()) throw ArgumentError("tensor_lift of an empty family");
    const int n = f.n();
    Family out(n + 1);
    f.for_each([&](const Permutation& p) {
        const auto& e = p.entries();
        for (int pos = 0; pos <= n; ++pos) {
            std::vector<int> grown;
            grown.reserve(static_cast<std::size_t>(n) + 1);
            grown.insert(grown.end(), e.begin(), e.begin() + pos);
            grown.push_back(n + 1);
            grown.insert(grown.end(), e.begin() + pos, e.end());
            out.insert(Permutation::unchecked(std::move(grown)));
        }
    });
    return out;
}

namespace {

void check_search_cap(int n, bool allow_large) {
    if (n < 1) throw ArgumentError("anticode search requires n >= 1");
    const int cap = allow_large ? kSearchCapOverride : kSearchCap;
    if (n > cap)
        throw BudgetExceededError("anticode search capped at n <= " + std::to_string(cap) +
                                  (allow_large ? "" : " (pass the large-search override for 7)") +
                                  "; got n = " + std::to_string(n));
}

}  // namespace

UndirectedGraph compatibility_graph(int n, int k, bool allow_large) {
    check_search_cap(n, allow_large);
    if (k < 0) throw ArgumentError("k must be nonnegative");
    const DistanceProfile profile = DistanceProfile::build(n);
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));
    const int v_count = static_cast<int>(total);

    // Materialize all permutations and their inverse tables once.
    std::vector<std::vector<int>> perms(total), invs(total);
    {
        std::uint64_t r = 0;
        for_each_permutation(n, [&](const std::vector<int>& g) {
            perms[r] = g;
            std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
            for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = i + 1;
            invs[r] = std::move(inv);
            ++r;
        });
    }

    std::vector<SymbolSet> rows(total, SymbolSet(v_count));
    chunked_scan<int>(total, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<int> q(static_cast<std::size_t>(n));
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::vector<int>& inv = invs[i];
            for (std::uint64_t j = i + 1; j < total; ++j) {
                const std::vector<int>& pj = perms[j];
                for (int t = 0; t < n; ++t)
                    q[static_cast<std::size_t>(t)] =
                        inv[static_cast<std::size_t>(pj[static_cast<std::size_t>(t)])];
                if (profile.distance_by_rank(rank_u64(q)) <= k)
                    rows[i].add(static_cast<int>(j) + 1);
            }
        }
        return 0;
    });
    // Mirror the upper triangle.
    for (int u = 1; u <= v_count; ++u)
        rows[static_cast<std::size_t>(u - 1)].for_each([&](int v) {
            if (v > u) rows[static_cast<std::size_t>(v - 1)].add(u);
        });
    return UndirectedGraph::from_adjacency(std::move(rows));
}

SearchReport max_anticode(int n, int k, std::uint64_t budget, bool allow_large) {
    check_search_cap(n, allow_large);
    if (k < 0) throw ArgumentError("k must be nonnegative");
    const auto start = std::chrono::steady_clock::now();

    SearchReport report;
    report.n = n;
    report.k = k;
    report.k_effective = std::min(k, n - 1);  // the metric never exceeds n-1
    report.conjectured =
        falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(std::min(k, n)));
    report.witness = Family(n);

    const int ke = report.k_effective;
    if (ke <= 0) {
        report.witness.insert(Permutation::identity(n));
        report.best_size = 1;
    } else if (ke >= n - 1) {
        // Whole space: every pair is within n-1.
        enumerate_permutations(n, [&](const Permutation& p) { report.witness.insert(p); });
        report.best_size = factorial(static_cast<unsigned>(n));
    } else {
        const UndirectedGraph graph = compatibility_graph(n, ke, allow_large);
        const CliqueSearch clique = max_clique_containing(graph, 1, budget);
        report.nodes_explored = clique.nodes;
        report.status = clique.exact ? SearchStatus::kExact : SearchStatus::kLowerBound;
        report.best_size = clique.best_size;
        for (int v : clique.witness)
            report.witness.insert(unrank(n, BigCount(v - 1)));
    }

    report.matches_conjecture = report.best_size == report.conjectured;
    report.witness_is_cylinder = is_cylinder(report.witness).has_value();
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count());
    return report;
}

ConjectureReport verify_conjecture(int n, int k, std::uint64_t budget, bool allow_large) {
    ConjectureReport out;
    out.search = max_anticode(n, k, budget, allow_large);
    const int ke = out.search.k_effective;

    // Constructive lower bound: the cylinder over the top ke symbols.
    SymbolSet top(n);
    for (int s = n - ke + 1; s <= n; ++s) top.add(s);
    const Family constructed = cylinder(n, top, Permutation::identity(n));
    out.cylinder_size = constructed.size();
    if (out.cylinder_size !=
        falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(ke)))
        throw UlamError("internal: cylinder construction size mismatch");
    if (family_diameter(constructed) > ke)
        throw UlamError("internal: cylinder construction exceeds diameter bound");
    if (out.search.best_size < out.cylinder_size && out.search.status == SearchStatus::kExact)
        throw UlamError("internal: exact search missed the cylinder construction");

    if (out.search.status == SearchStatus::kExact)
        out.verdict = out.search.matches_conjecture ? ConjectureVerdict::kEqual
                                                    : ConjectureVerdict::kCounterexample;
    else
        out.verdict = out.search.best_size > out.search.conjectured
                          ? ConjectureVerdict::kCounterexample
                          : ConjectureVerdict::kInconclusive;
    return out;
}

}  // namespace ulam
