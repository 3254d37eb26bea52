#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ulam/bigcount.hpp"
#include "ulam/graph.hpp"
#include "ulam/permutation.hpp"
#include "ulam/symbol_set.hpp"

namespace ulam {

/// Exhaustive anticode search defaults to n <= 6 (720 vertices); n = 7 (5040)
/// needs the explicit override.
inline constexpr int kSearchCap = 6;
inline constexpr int kSearchCapOverride = 7;

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Set of permutations sharing one n, deduplicated, O(1) membership.
class Family {
public:
    Family() = default;
    explicit Family(int n) : n_(n) {}

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    void insert(const Permutation& p);
    bool contains(const Permutation& p) const { return members_.count(p) > 0; }

    /// Members in lexicographic order (for deterministic output).
    std::vector<Permutation> sorted_members() const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& p : members_) fn(p);
    }

private:
    int n_ = 0;
    std::unordered_set<Permutation, PermutationHash> members_;
};

/// Maximum pairwise Ulam distance; errors on an empty family.
int family_diameter(const Family& f);

/// All permutations that agree with `anchor` once the symbols of `deleted`
/// are removed: size n!/(n-|A|)!, diameter at most |A|.
Family cylinder(int n, const SymbolSet& deleted, const Permutation& anchor);

struct CylinderWitness {
    SymbolSet deleted;
    Permutation anchor;
};

/// Recognizes cylinders: returns a witness (A, anchor) with
/// f == cylinder(n, A, anchor) when one exists.  |A| is forced by the size,
/// and A must cover the union of the difference graphs against one member.
std::optional<CylinderWitness> is_cylinder(const Family& f);

/// Inserts symbol n+1 into every position of every member: size grows by a
/// factor n+1 and diameter by exactly 1.
Family tensor_lift(const Family& f);

/// Graph on all of S_n, vertex v <-> the rank-(v-1) permutation, with an edge
/// iff the Ulam distance is at most k.  Built from a single distance row by
/// left-invariance.
UndirectedGraph compatibility_graph(int n, int k, bool allow_large = false);

enum class SearchStatus { kExact, kLowerBound };

struct SearchReport {
    int n = 0;
    int k = 0;            ///< as requested
    int k_effective = 0;  ///< clamped to n-1 (distances never exceed n-1)
    BigCount best_size;
    Family witness;
    SearchStatus status = SearchStatus::kExact;
    BigCount conjectured;  ///< n!/(n-k)!
    bool matches_conjecture = false;
    bool witness_is_cylinder = false;
    std::uint64_t elapsed_ms = 0;
    std::uint64_t nodes_explored = 0;
};

/// Exact f_k(n) by maximum clique over the compatibility graph, restricted to
/// cliques containing the identity (any maximum family translates to one, by
/// left-invariance).  Budget exhaustion degrades status to kLowerBound with
/// the best family found.
SearchReport max_anticode(int n, int k, std::uint64_t budget = kDefaultSearchBudget,
                          bool allow_large = false);

enum class ConjectureVerdict { kEqual, kCounterexample, kInconclusive };

struct ConjectureReport {
    SearchReport search;
    ConjectureVerdict verdict = ConjectureVerdict::kInconclusive;
    BigCount cylinder_size;  ///< the constructive lower bound that was checked
};

/// Runs max_anticode, compares against n!/(n-k)!, recognizes the witness, and
/// sanity-checks the cylinder construction lower bound.
ConjectureReport verify_conjecture(int n, int k, std::uint64_t budget = kDefaultSearchBudget,
                                   bool allow_large = false);

}  // namespace ulam
