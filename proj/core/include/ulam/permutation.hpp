#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ulam/symbol_set.hpp"

namespace ulam {

/// Permutation of {1..n} in one-line notation: entries()[i] is the symbol at
/// position i+1.  Symbols and positions are 1-based on every interface;
/// storage is a plain 0-indexed vector.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `one_line` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    /// n, n-1, ..., 1 — the unique point at distance n-1 from the identity.
    static Permutation reversal(int n);

    /// Skips bijection validation; the caller guarantees it.  Used by the
    /// enumeration hot paths.
    static Permutation unchecked(std::vector<int> one_line);

    /// Accepts comma- or space-separated 1-based integers ("4,5,2,3,1") or a
    /// compact digit string ("45231") when n <= 9.  Compact strings of length
    /// >= 10 are ambiguous and rejected.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// Symbol at 1-based position.
    int at(int position) const;

    /// 1-based position of a symbol.
    int position_of(int symbol) const;

    const std::vector<int>& entries() const { return entries_; }

    /// Replaces the contents without validation, reusing storage.
    void assign_unchecked(const std::vector<int>& one_line) { entries_ = one_line; }

    /// Always comma-separated, e.g. "4,5,2,3,1".
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

/// Distinct symbols from {1..n}, possibly fewer than n of them; the result
/// type of deletions.
using Sequence = std::vector<int>;

/// Removes every symbol of `a` from `p`, preserving the order of survivors.
Sequence delete_symbols(const Permutation& p, const SymbolSet& a);

/// q with q[p[i]] = i for all i.
Permutation inverse(const Permutation& p);

/// Symbolwise relabeling (s o p)[i] = s[p[i]].  This is the composition
/// convention used throughout; it is a left-invariant isometry of the Ulam
/// metric in s.
Permutation relabel(const Permutation& s, const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace ulam
