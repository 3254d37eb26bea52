#pragma once

#include <span>
#include <vector>

#include "ulam/permutation.hpp"

namespace ulam {

/// Length of the longest strictly increasing subsequence; O(L log L)
/// patience method.  Entries must be pairwise distinct.
int lis(std::span<const int> entries);

/// Same, reusing a caller-owned tails buffer (enumeration hot path).
int lis_into(std::span<const int> entries, std::vector<int>& tails);

/// Ulam (deletion) distance, computed as n - lis(a^-1 o b).  Agrees with
/// ulam_distance_oracle; that equivalence is a tested property, not an
/// assumption.
int ulam_distance(const Permutation& a, const Permutation& b);

/// Reference implementation straight from the definition: the smallest |A|
/// with a - A = b - A, searched in increasing cardinality with early exit.
/// Cost grows like sum of C(n,s) up to the distance; intended for n <= ~12.
int ulam_distance_oracle(const Permutation& a, const Permutation& b);

}  // namespace ulam
