#include "ulam/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

UndirectedGraph::UndirectedGraph(int vertex_count) {
    if (vertex_count < 0) throw ArgumentError("vertex count must be nonnegative");
    n_ = vertex_count;
    adj_.assign(static_cast<std::size_t>(vertex_count), SymbolSet(vertex_count));
}

UndirectedGraph UndirectedGraph::from_adjacency(std::vector<SymbolSet> rows) {
    UndirectedGraph g;
    g.n_ = static_cast<int>(rows.size());
    g.adj_ = std::move(rows);
    std::uint64_t degree_sum = 0;
    for (int v = 1; v <= g.n_; ++v) {
        const SymbolSet& row = g.adj_[static_cast<std::size_t>(v - 1)];
        if (row.universe() != g.n_) throw ArgumentError("adjacency row universe mismatch");
        if (row.contains(v)) throw ArgumentError("self-loop in adjacency rows");
        degree_sum += static_cast<std::uint64_t>(row.cardinality());
    }
    g.edges_ = degree_sum / 2;
    return g;
}

void UndirectedGraph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw ArgumentError("edge endpoint outside 1.." + std::to_string(n_));
    if (u == v) throw ArgumentError("self-loops are not allowed");
    if (!adj_[static_cast<std::size_t>(u - 1)].contains(v)) {
        adj_[static_cast<std::size_t>(u - 1)].add(v);
        adj_[static_cast<std::size_t>(v - 1)].add(u);
        ++edges_;
    }
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return adj_[static_cast<std::size_t>(u - 1)].contains(v);
}

const SymbolSet& UndirectedGraph::neighbors(int v) const {
    if (v < 1 || v > n_) throw ArgumentError("vertex outside 1.." + std::to_string(n_));
    return adj_[static_cast<std::size_t>(v - 1)];
}

UndirectedGraph symmetric_difference(const UndirectedGraph& a, const UndirectedGraph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw SizeMismatchError("symmetric_difference: vertex count mismatch");
    std::vector<SymbolSet> rows;
    rows.reserve(static_cast<std::size_t>(a.vertex_count()));
    for (int v = 1; v <= a.vertex_count(); ++v) rows.push_back(a.neighbors(v) ^ b.neighbors(v));
    return UndirectedGraph::from_adjacency(std::move(rows));
}

UndirectedGraph inversion_graph(const Permutation& g) {
    const int n = g.size();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(g.at(i))] = i;
    UndirectedGraph out(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (pos[static_cast<std::size_t>(x)] > pos[static_cast<std::size_t>(y)])
                out.add_edge(x, y);
    return out;
}

UndirectedGraph ulam_graph(const Permutation& s, const Permutation& g) {
    if (s.size() != g.size()) throw SizeMismatchError("ulam_graph: size mismatch");
    const int n = s.size();
    std::vector<int> pos_s(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> pos_g(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        pos_s[static_cast<std::size_t>(s.at(i))] = i;
        pos_g[static_cast<std::size_t>(g.at(i))] = i;
    }
    UndirectedGraph out(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            const long long ds = pos_s[static_cast<std::size_t>(x)] - pos_s[static_cast<std::size_t>(y)];
            const long long dg = pos_g[static_cast<std::size_t>(x)] - pos_g[static_cast<std::size_t>(y)];
            if (ds * dg < 0) out.add_edge(x, y);
        }
    return out;
}

void write_edge_list(std::ostream& os, const UndirectedGraph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](int u, int v) { os << u << ' ' << v << '\n'; });
}

UndirectedGraph read_edge_list(std::istream& is) {
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw ParseError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header value");
    UndirectedGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(is >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) +
                                              " edges, got " + std::to_string(i));
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge list: endpoint outside 1.." + std::to_string(n));
        if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

}  // namespace ulam
