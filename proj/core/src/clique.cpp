// Maximum clique by branch and bound in the style of the Tomita family of
// solvers: candidates are kept in bitsets, a greedy coloring orders each
// candidate set and bounds the attainable clique size, and branches are cut
// once |R| + color can no longer beat the incumbent.  The exact witness is
// re-derived afterwards as the lexicographically least maximum clique so the
// reported set never depends on search order.

#include "ulam/clique.hpp"

#include <algorithm>

#include "ulam/errors.hpp"
#include "ulam/symbol_set.hpp"

namespace ulam {

namespace {

struct Solver {
    const UndirectedGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best_size = 0;
    std::vector<int> best;
    std::vector<int> current;

    bool tick() {
        if (exhausted) return false;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        return true;
    }

    /// Greedy coloring of `p`; returns (vertex, color) pairs with colors
    /// ascending, so iterating from the back visits high colors first.
    void color_order(const SymbolSet& p, std::vector<std::pair<int, int>>& order) const {
        order.clear();
        SymbolSet uncolored = p;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            SymbolSet cls = uncolored;
            while (!cls.empty()) {
                const int v = cls.first();
                order.emplace_back(v, color);
                uncolored.remove(v);
                cls.remove(v);
                cls -= g.neighbors(v);
            }
        }
    }

    void expand(SymbolSet p) {
        if (!tick()) return;
        if (p.empty()) {
            if (static_cast<int>(current.size()) > best_size) {
                best_size = static_cast<int>(current.size());
                best = current;
            }
            return;
        }
        std::vector<std::pair<int, int>> order;
        color_order(p, order);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, color] = *it;
            if (static_cast<int>(current.size()) + color <= best_size) return;
            if (exhausted) return;
            current.push_back(v);
            expand(p & g.neighbors(v));
            current.pop_back();
            p.remove(v);
        }
    }

    /// Is there a clique of size `need` inside `p`?  Same pruning, first hit
    /// wins.
    bool exists(SymbolSet p, int need) {
        if (need <= 0) return true;
        if (p.cardinality() < need) return false;
        if (!tick()) throw BudgetExceededError("clique feasibility search exceeded node budget");
        std::vector<std::pair<int, int>> order;
        color_order(p, order);
        if (order.empty() || order.back().second < need) return false;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, color] = *it;
            if (color < need) return false;
            if (exists(p & g.neighbors(v), need - 1)) return true;
            p.remove(v);
        }
        return false;
    }
};

/// Greedy clique through `anchor` to seed the incumbent.
std::vector<int> greedy_seed(const UndirectedGraph& g, int anchor) {
    std::vector<int> r{anchor};
    SymbolSet p = g.neighbors(anchor);
    while (!p.empty()) {
        int pick = 0, pick_deg = -1;
        for (int v = p.first(); v != 0; v = p.next_after(v)) {
            const int d = g.neighbors(v).intersect_count(p);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        r.push_back(pick);
        p &= g.neighbors(pick);
    }
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

CliqueSearch max_clique_containing(const UndirectedGraph& g, int anchor,
                                   std::uint64_t node_budget) {
    if (anchor < 1 || anchor > g.vertex_count())
        throw ArgumentError("clique anchor outside vertex range");

    Solver solver{g, node_budget};
    solver.best = greedy_seed(g, anchor);
    solver.best_size = static_cast<int>(solver.best.size());
    solver.current.push_back(anchor);
    solver.expand(g.neighbors(anchor));
    solver.current.pop_back();

    CliqueSearch result;
    result.best_size = solver.best_size;
    result.exact = !solver.exhausted;
    std::sort(solver.best.begin(), solver.best.end());
    result.witness = solver.best;

    if (result.exact && result.best_size > 1) {
        // Lexicographically least maximum clique.  The anchor is vertex-least
        // whenever it is vertex 1; for general anchors this is the least
        // maximum clique through the anchor.
        std::vector<int> chosen{anchor};
        SymbolSet p = g.neighbors(anchor);
        try {
            while (static_cast<int>(chosen.size()) < result.best_size) {
                const int need = result.best_size - static_cast<int>(chosen.size());
                bool advanced = false;
                for (int v = p.first(); v != 0; v = p.next_after(v)) {
                    if (solver.exists(p & g.neighbors(v), need - 1)) {
                        chosen.push_back(v);
                        p &= g.neighbors(v);
                        advanced = true;
                        break;
                    }
                    p.remove(v);
                }
                if (!advanced) throw UlamError("internal: lex-least clique extraction failed");
            }
            std::sort(chosen.begin(), chosen.end());
            result.witness = chosen;
        } catch (const BudgetExceededError&) {
            // Keep the search witness; the size stays exact, only the
            // lex-least refinement ran out of nodes.
        }
    }
    result.nodes = solver.nodes;
    return result;
}

}  // namespace ulam
