#pragma once

#include <cstdint>
#include <vector>

#include "ulam/graph.hpp"

namespace ulam {

struct CliqueSearch {
    int best_size = 0;
    std::vector<int> witness;  ///< vertex ids, ascending; lex-least when exact
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Exact maximum clique among cliques containing `anchor`: branch and bound
/// with greedy-coloring upper bounds over bitset candidate sets.  On budget
/// exhaustion returns the best clique found with exact = false.  Sequential
/// and deterministic.
CliqueSearch max_clique_containing(const UndirectedGraph& g, int anchor,
                                   std::uint64_t node_budget);

}  // namespace ulam
