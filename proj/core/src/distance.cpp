#include "ulam/distance.hpp"

#include <algorithm>

#include "ulam/errors.hpp"

namespace ulam {

int lis(std::span<const int> entries) {
    std::vector<int> tails;
    return lis_into(entries, tails);
}

int lis_into(std::span<const int> entries, std::vector<int>& tails) {
    tails.clear();
    for (int x : entries) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

int ulam_distance(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw SizeMismatchError("ulam_distance: size mismatch");
    const Permutation q = relabel(inverse(a), b);
    return a.size() - lis(q.entries());
}

namespace {

/// delete(a,C) == delete(b,C) for the symbol set marked in `in_set`, without
/// materializing either sequence.
bool equal_after_delete(const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<char>& in_set) {
    const std::size_t n = a.size();
    std::size_t i = 0, j = 0;
    while (true) {
        while (i < n && in_set[static_cast<std::size_t>(a[i])]) ++i;
        while (j < n && in_set[static_cast<std::size_t>(b[j])]) ++j;
        if (i == n || j == n) return i == n && j == n;
        if (a[i] != b[j]) return false;
        ++i;
        ++j;
    }
}

}  // namespace

int ulam_distance_oracle(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw SizeMismatchError("ulam_distance_oracle: size mismatch");
    const int n = a.size();
    if (a == b) return 0;

    std::vector<char> in_set(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> idx;
    for (int s = 1; s <= n; ++s) {
        // Iterate all C(n,s) subsets {idx[0] < ... < idx[s-1]} of {1..n}.
        idx.resize(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            std::fill(in_set.begin(), in_set.end(), 0);
            for (int v : idx) in_set[static_cast<std::size_t>(v)] = 1;
            if (equal_after_delete(a.entries(), b.entries(), in_set)) return s;

            int i = s - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (s - 1 - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    // Deleting any n-1 symbols always leaves equal one-symbol strings, so the
    // loop cannot fall through for distinct inputs.
    return n - 1;
}

}  // namespace ulam
