#pragma once

#include <cstdint>
#include <vector>

#include "ulam/bigcount.hpp"
#include "ulam/graph.hpp"
#include "ulam/symbol_set.hpp"

namespace ulam {

inline constexpr std::uint64_t kDefaultCoverBudget = 50'000'000;

/// True iff every edge of g has at least one endpoint in c.
bool is_vertex_cover(const UndirectedGraph& g, const SymbolSet& c);

struct MinCoverResult {
    int tau = 0;
    SymbolSet witness;        ///< lexicographically least cover of size tau
    std::uint64_t nodes = 0;  ///< branch-and-bound nodes spent
};

/// Exact vertex cover number with a deterministic witness.  Branch and bound
/// with degree-1 and dominance reductions and a greedy-matching lower bound;
/// raises BudgetExceededError past `node_limit` nodes.
MinCoverResult min_vertex_cover(const UndirectedGraph& g,
                                std::uint64_t node_limit = kDefaultCoverBudget);

/// Does the subgraph induced by `active` admit a vertex cover of size <= k?
/// Shared budget counter across calls; used by the witness construction and
/// by the cylinder recognizer.
bool cover_exists(const UndirectedGraph& g, const SymbolSet& active, int k,
                  std::uint64_t& nodes, std::uint64_t node_limit);

/// Lexicographically least vertex cover of exactly `size` vertices; requires
/// tau(g) <= size <= |V|.
SymbolSet lex_least_cover_of_size(const UndirectedGraph& g, int size, std::uint64_t& nodes,
                                  std::uint64_t node_limit);

/// Exact number of vertex covers of every size m = 0..|V| (index = m).
std::vector<BigCount> cover_census(const UndirectedGraph& g,
                                   std::uint64_t node_limit = kDefaultCoverBudget);

/// Exact number of vertex covers with m vertices.
BigCount count_vertex_covers(const UndirectedGraph& g, int m,
                             std::uint64_t node_limit = kDefaultCoverBudget);

struct CoverEncoding {
    std::vector<SymbolSet> covers;  ///< all size-m covers, lex order
    BigCount attempted;             ///< candidate decodings tried
};

/// Two-question decoding of all size-m covers from a fixed minimum cover S:
/// for each U subset of S, T = U united with the neighborhoods of S - U, then
/// T extended by m - |T| outside vertices.  Candidates attempted never exceed
/// 2^tau * C(|V|-tau, m-tau).
CoverEncoding covers_via_encoding(const UndirectedGraph& g, const SymbolSet& min_cover, int m,
                                  std::uint64_t node_limit = kDefaultCoverBudget);

/// 2^tau * C(v - tau, m - tau); requires tau <= m <= v.
BigCount cover_count_bound(int tau, int v, int m);

}  // namespace ulam
