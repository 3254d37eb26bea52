#include "ulam/cover.hpp"

#include <algorithm>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

bool is_vertex_cover(const UndirectedGraph& g, const SymbolSet& c) {
    if (c.universe() != g.vertex_count())
        throw SizeMismatchError("is_vertex_cover: universe mismatch");
    const SymbolSet outside = c.complemented();
    bool ok = true;
    outside.for_each([&](int x) {
        if (ok && g.neighbors(x).intersects(outside)) ok = false;
    });
    return ok;
}

namespace {

struct CoverSearch {
    const UndirectedGraph& g;
    std::uint64_t nodes = 0;
    std::uint64_t limit;

    void tick() {
        if (++nodes > limit)
            throw BudgetExceededError("vertex cover search exceeded node limit " +
                                      std::to_string(limit));
    }

    /// Size of a greedily built maximal matching in the induced subgraph; any
    /// cover needs at least one endpoint per matched edge.
    int matching_lower_bound(const SymbolSet& active) const {
        SymbolSet rem = active;
        int size = 0;
        for (int x = rem.first(); x != 0; x = rem.next_after(x)) {
            if (!rem.contains(x)) continue;
            const SymbolSet nbr = g.neighbors(x) & rem;
            const int y = nbr.first();
            if (y != 0) {
                rem.remove(x);
                rem.remove(y);
                ++size;
            }
        }
        return size;
    }

    bool exists(SymbolSet active, int k) {
        tick();
        if (k < 0) return false;
        while (true) {
            // Drop isolated vertices, find a degree-1 vertex and the busiest one.
            int max_deg = 0, max_v = 0, pend_u = 0, pend_v = 0;
            for (int x = active.first(); x != 0; x = active.next_after(x)) {
                const int d = g.neighbors(x).intersect_count(active);
                if (d == 0) {
                    active.remove(x);
                    continue;
                }
                if (d == 1 && pend_u == 0) {
                    pend_u = x;
                    pend_v = (g.neighbors(x) & active).first();
                }
                if (d > max_deg) {
                    max_deg = d;
                    max_v = x;
                }
            }
            if (max_deg == 0) return true;  // edgeless
            if (k <= 0) return false;

            if (pend_u != 0) {
                // Degree-1 reduction: some optimal cover takes the neighbor.
                active.remove(pend_u);
                active.remove(pend_v);
                --k;
                continue;
            }

            if (matching_lower_bound(active) > k) return false;

            // Dominance: if N[u] is contained in N[v] for an edge uv, take v.
            int dom = 0;
            for (int u = active.first(); u != 0 && dom == 0; u = active.next_after(u)) {
                SymbolSet closed_u = g.neighbors(u) & active;
                closed_u.add(u);
                const SymbolSet nbrs = g.neighbors(u) & active;
                for (int v = nbrs.first(); v != 0; v = nbrs.next_after(v)) {
                    SymbolSet closed_v = g.neighbors(v) & active;
                    closed_v.add(v);
                    if (closed_u.is_subset_of(closed_v)) {
                        dom = v;
                        break;
                    }
                }
            }
            if (dom != 0) {
                active.remove(dom);
                --k;
                continue;
            }

            // Branch on the busiest vertex: in the cover, or all neighbors are.
            SymbolSet without = active;
            without.remove(max_v);
            if (exists(without, k - 1)) return true;
            const SymbolSet nu = g.neighbors(max_v) & active;
            if (nu.cardinality() > k) return false;
            SymbolSet rest = without - nu;
            return exists(rest, k - nu.cardinality());
        }
    }
};

}  // namespace

bool cover_exists(const UndirectedGraph& g, const SymbolSet& active, int k, std::uint64_t& nodes,
                  std::uint64_t node_limit) {
    CoverSearch search{g, nodes, node_limit};
    bool ok;
    try {
        ok = search.exists(active, k);
    } catch (...) {
        nodes = search.nodes;
        throw;
    }
    nodes = search.nodes;
    return ok;
}

SymbolSet lex_least_cover_of_size(const UndirectedGraph& g, int size, std::uint64_t& nodes,
                                  std::uint64_t node_limit) {
    const int n = g.vertex_count();
    if (size < 0 || size > n) throw ArgumentError("cover size outside 0..|V|");
    SymbolSet chosen(n);
    SymbolSet active = SymbolSet::full(n);
    int k = size;
    for (int x = 1; x <= n && k > 0; ++x) {
        if (!active.contains(x)) continue;
        SymbolSet without = active;
        without.remove(x);
        const bool can_take = active.cardinality() - 1 >= k - 1 &&
                              cover_exists(g, without, k - 1, nodes, node_limit);
        if (can_take) {
            chosen.add(x);
            active = without;
            --k;
            continue;
        }
        // x stays out, so every neighbor still active must go in.
        const SymbolSet forced = g.neighbors(x) & active;
        if (forced.cardinality() > k)
            throw UlamError("internal: infeasible exclusion in cover witness construction");
        chosen |= forced;
        k -= forced.cardinality();
        active = without - forced;
        if (k < 0) throw UlamError("internal: cover witness overshot budget");
    }
    if (chosen.cardinality() != size)
        throw UlamError("internal: cover witness has wrong size");
    if (!is_vertex_cover(g, chosen))
        throw UlamError("internal: cover witness does not cover");
    return chosen;
}

MinCoverResult min_vertex_cover(const UndirectedGraph& g, std::uint64_t node_limit) {
    const int n = g.vertex_count();
    MinCoverResult result;
    result.witness = SymbolSet(n);
    if (g.edge_count() == 0) return result;

    CoverSearch probe{g, 0, node_limit};
    const SymbolSet all = SymbolSet::full(n);
    int k = probe.matching_lower_bound(all);
    std::uint64_t nodes = probe.nodes;
    while (!cover_exists(g, all, k, nodes, node_limit)) ++k;
    result.tau = k;
    result.witness = lex_least_cover_of_size(g, k, nodes, node_limit);
    result.nodes = nodes;
    return result;
}

namespace {

struct CensusSearch {
    const UndirectedGraph& g;
    int n;
    std::uint64_t nodes = 0;
    std::uint64_t limit;

    void tick() {
        if (++nodes > limit)
            throw BudgetExceededError("cover census exceeded node limit " + std::to_string(limit));
    }

    /// Counts covers inside `active` by size; result[m] is the number of
    /// covers using exactly m active vertices.
    std::vector<BigCount> census(const SymbolSet& active) {
        tick();
        int max_deg = 0, max_v = 0;
        for (int x = active.first(); x != 0; x = active.next_after(x)) {
            const int d = g.neighbors(x).intersect_count(active);
            if (d > max_deg) {
                max_deg = d;
                max_v = x;
            }
        }
        std::vector<BigCount> out(static_cast<std::size_t>(n) + 1);
        if (max_deg == 0) {
            // Edgeless: any subset works.
            const int r = active.cardinality();
            for (int m = 0; m <= r; ++m) out[static_cast<std::size_t>(m)] = binomial(r, m);
            return out;
        }
        SymbolSet without = active;
        without.remove(max_v);
        const std::vector<BigCount> with_v = census(without);  // max_v in the cover
        const SymbolSet nu = g.neighbors(max_v) & active;
        const std::vector<BigCount> without_v = census(without - nu);  // out: N(v) forced in
        const int shift = nu.cardinality();
        for (int m = 0; m <= n; ++m) {
            BigCount total = 0;
            if (m >= 1) total += with_v[static_cast<std::size_t>(m - 1)];
            if (m >= shift) total += without_v[static_cast<std::size_t>(m - shift)];
            out[static_cast<std::size_t>(m)] = std::move(total);
        }
        return out;
    }
};

}  // namespace

std::vector<BigCount> cover_census(const UndirectedGraph& g, std::uint64_t node_limit) {
    CensusSearch search{g, g.vertex_count(), 0, node_limit};
    return search.census(SymbolSet::full(g.vertex_count()));
}

BigCount count_vertex_covers(const UndirectedGraph& g, int m, std::uint64_t node_limit) {
    if (m < 0 || m > g.vertex_count())
        throw ArgumentError("cover size m outside 0..|V|");
    return cover_census(g, node_limit)[static_cast<std::size_t>(m)];
}

CoverEncoding covers_via_encoding(const UndirectedGraph& g, const SymbolSet& min_cover, int m,
                                  std::uint64_t node_limit) {
    const int n = g.vertex_count();
    if (min_cover.universe() != n) throw SizeMismatchError("covers_via_encoding: universe mismatch");
    if (m < 0 || m > n) throw ArgumentError("cover size m outside 0..|V|");
    if (!is_vertex_cover(g, min_cover))
        throw ArgumentError("covers_via_encoding: S is not a vertex cover");
    const MinCoverResult mc = min_vertex_cover(g, node_limit);
    if (min_cover.cardinality() != mc.tau)
        throw ArgumentError("covers_via_encoding: S is not a minimum vertex cover (|S| = " +
                            std::to_string(min_cover.cardinality()) + ", tau = " +
                            std::to_string(mc.tau) + ")");

    const std::vector<int> s_vec = min_cover.to_vector();
    const int tau = static_cast<int>(s_vec.size());
    if (tau > 62) throw BudgetExceededError("covers_via_encoding: 2^tau enumeration too large");

    CoverEncoding result;
    result.attempted = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << tau); ++bits) {
        SymbolSet u(n);
        SymbolSet t(n);
        for (int i = 0; i < tau; ++i) {
            if ((bits >> i) & 1)
                u.add(s_vec[static_cast<std::size_t>(i)]);
        }
        t = u;
        for (int i = 0; i < tau; ++i)
            if (!((bits >> i) & 1)) t |= g.neighbors(s_vec[static_cast<std::size_t>(i)]);
        const int t_size = t.cardinality();
        if (t_size > m) continue;

        // Choose the remaining m - |T| vertices outside T.
        const std::vector<int> outside = t.complemented().to_vector();
        const int pick = m - t_size;
        const int avail = static_cast<int>(outside.size());
        if (pick > avail) continue;
        std::vector<int> idx(static_cast<std::size_t>(pick));
        for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            SymbolSet candidate = t;
            for (int i : idx) candidate.add(outside[static_cast<std::size_t>(i)]);
            ++result.attempted;
            if ((candidate & min_cover) == u && is_vertex_cover(g, candidate))
                result.covers.push_back(candidate);

            if (pick == 0) break;
            int i = pick - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == avail - (pick - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < pick; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(result.covers.begin(), result.covers.end(),
              [](const SymbolSet& a, const SymbolSet& b) { return lex_less(a, b); });
    return result;
}

BigCount cover_count_bound(int tau, int v, int m) {
    if (tau < 0 || m < tau || v < m)
        throw ArgumentError("cover_count_bound requires 0 <= tau <= m <= v");
    return pow2(static_cast<unsigned>(tau)) * binomial(v - tau, m - tau);
}

}  // namespace ulam
