#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ulam/permutation.hpp"
#include "ulam/symbol_set.hpp"

namespace ulam {

/// Simple graph on vertices 1..n with bitset adjacency rows.  Irreflexive and
/// symmetric by construction.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int vertex_count);

    /// Adopts adjacency rows directly (each a SymbolSet over the vertex
    /// universe); rows must already be symmetric and irreflexive.
    static UndirectedGraph from_adjacency(std::vector<SymbolSet> rows);

    int vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return edges_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const SymbolSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).cardinality(); }

    /// fn(u, v) for every edge, with u < v, ascending.
    template <class Fn>
    void for_each_edge(Fn&& fn) const {
        for (int u = 1; u <= n_; ++u)
            for (int v = adj_[static_cast<std::size_t>(u - 1)].next_after(u); v != 0;
                 v = adj_[static_cast<std::size_t>(u - 1)].next_after(v))
                fn(u, v);
    }

    bool operator==(const UndirectedGraph&) const = default;

private:
    int n_ = 0;
    std::uint64_t edges_ = 0;
    std::vector<SymbolSet> adj_;
};

/// Edgewise symmetric difference of two graphs on the same vertex set.
UndirectedGraph symmetric_difference(const UndirectedGraph& a, const UndirectedGraph& b);

/// Graph on symbols with x ~ y iff x < y and the pair occurs in decreasing
/// order in g (position of x after position of y).
UndirectedGraph inversion_graph(const Permutation& g);

/// Graph on symbols with x ~ y iff s and g disagree on the relative order of
/// x and y; equals the symmetric difference of the two inversion graphs.  Its
/// vertex covers are exactly the common deletion sets of s and g.
UndirectedGraph ulam_graph(const Permutation& s, const Permutation& g);

/// Text format: header "n m", then one "u v" line per edge, 1-based.
void write_edge_list(std::ostream& os, const UndirectedGraph& g);
UndirectedGraph read_edge_list(std::istream& is);

}  // namespace ulam
