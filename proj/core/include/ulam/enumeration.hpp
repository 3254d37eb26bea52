#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ulam/bigcount.hpp"
#include "ulam/permutation.hpp"

namespace ulam {

/// Full-space scans default to n <= 11 (11! with cheap per-item work keeps CI
/// desk-scale); n = 12..13 needs the explicit override.
inline constexpr int kScanCap = 11;
inline constexpr int kScanCapOverride = 13;

struct BallSpec {
    int n = 0;
    Permutation center;
    int radius = 0;
};

/// Exact number of permutations within `radius` of the center.  Membership is
/// one relabel plus an increasing-subsequence length per candidate; the count
/// is center-independent by left-invariance (verified in tests, not assumed).
BigCount ball_size(const BallSpec& spec, bool allow_large = false);

/// Streams the members in lexicographic order.
void ball_members(const BallSpec& spec, const std::function<void(const Permutation&)>& fn,
                  bool allow_large = false);

/// Histogram of d(center, .) over S_n, indexed by distance 0..n-1; entries
/// sum to n!.
std::vector<BigCount> sphere_sizes(int n, const Permutation& center, bool allow_large = false);

/// Exact size of { g : d(a,g) <= k and d(b,g) <= k }.
BigCount ball_intersection(const Permutation& a, const Permutation& b, int k,
                           bool allow_large = false);

void ball_intersection_members(const Permutation& a, const Permutation& b, int k,
                               const std::function<void(const Permutation&)>& fn,
                               bool allow_large = false);

/// (identity, product of k disjoint adjacent transpositions 21 43 ... followed
/// by the fixed tail).  The pair is at distance exactly k; requires 2k <= n.
std::pair<Permutation, Permutation> transposition_pair(int n, int k);

/// All pairwise distances via one row: d(a,b) = row[rank(a^-1 o b)].
class DistanceProfile {
public:
    static DistanceProfile build(int n, bool allow_large = false);

    int n() const { return n_; }
    int distance(const Permutation& a, const Permutation& b) const;
    int distance_by_rank(std::uint64_t rank) const { return row_[rank]; }
    const std::vector<std::uint8_t>& identity_row() const { return row_; }

    /// Same shape as sphere_sizes(n, identity).
    std::vector<BigCount> histogram() const;

private:
    int n_ = 0;
    std::vector<std::uint8_t> row_;
};

}  // namespace ulam
