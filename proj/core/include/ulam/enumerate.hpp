#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ulam/bigcount.hpp"
#include "ulam/errors.hpp"
#include "ulam/permutation.hpp"

namespace ulam {

/// Full-S_n enumeration is capped here; 13! ~ 6.2e9 items is the most a desk
/// run should ever attempt.  Larger n raises BudgetExceededError.
inline constexpr int kEnumerationCap = 13;

/// Lexicographic rank, 0-based: rank(identity) = 0, rank(reversal) = n!-1.
BigCount rank(const Permutation& p);

/// Inverse of rank; requires 0 <= r < n!.
Permutation unrank(int n, const BigCount& r);

/// Machine-word variants used for chunked scans (require n <= kEnumerationCap).
std::uint64_t rank_u64(const std::vector<int>& one_line);
void unrank_u64(int n, std::uint64_t r, std::vector<int>& out);

namespace detail {

inline void check_enumeration_cap(int n) {
    if (n < 0) throw ArgumentError("n must be nonnegative");
    if (n > kEnumerationCap)
        throw BudgetExceededError("full enumeration capped at n <= " +
                                  std::to_string(kEnumerationCap) + " (got n = " +
                                  std::to_string(n) + ")");
}

}  // namespace detail

/// Calls fn(const std::vector<int>&) for each element of S_n in lexicographic
/// order.  n = 0 yields exactly one empty permutation.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    detail::check_enumeration_cap(n);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(static_cast<const std::vector<int>&>(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

/// Visits the lexicographic rank interval [lo, hi); disjoint intervals make
/// disjoint chunks for parallel consumers.
template <class Fn>
void for_each_permutation_range(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    detail::check_enumeration_cap(n);
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));
    if (lo > hi || hi > total) throw ArgumentError("permutation rank range out of bounds");
    if (lo == hi) return;
    std::vector<int> v;
    unrank_u64(n, lo, v);
    for (std::uint64_t r = lo; r < hi; ++r) {
        fn(static_cast<const std::vector<int>&>(v));
        std::next_permutation(v.begin(), v.end());
    }
}

/// Permutation-typed stream over S_n (lexicographic).  One object is reused
/// across calls; copy it to keep it.
template <class Fn>
void enumerate_permutations(int n, Fn&& fn) {
    Permutation p;
    for_each_permutation(n, [&](const std::vector<int>& v) {
        p.assign_unchecked(v);
        fn(static_cast<const Permutation&>(p));
    });
}

}  // namespace ulam
