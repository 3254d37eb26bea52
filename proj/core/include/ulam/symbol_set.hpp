#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "ulam/errors.hpp"

namespace ulam {

/// Subset of the symbol universe {1..n} with bitset semantics.  Cardinality
/// is maintained incrementally, so it is O(1) to query.  Also used for
/// vertex sets of graphs whose vertices are 1..n.
class SymbolSet {
public:
    SymbolSet() = default;

    explicit SymbolSet(int universe) {
        if (universe < 0) throw ArgumentError("SymbolSet universe must be nonnegative");
        n_ = universe;
        words_.assign(word_count(universe), 0);
    }

    static SymbolSet full(int universe) {
        SymbolSet s(universe);
        for (int i = 0; i < universe / 64; ++i) s.words_[i] = ~std::uint64_t{0};
        if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
        s.count_ = universe;
        return s;
    }

    template <class Container>
    static SymbolSet of(int universe, const Container& symbols) {
        SymbolSet s(universe);
        for (int x : symbols) s.add(x);
        return s;
    }

    static SymbolSet of(int universe, std::initializer_list<int> symbols) {
        SymbolSet s(universe);
        for (int x : symbols) s.add(x);
        return s;
    }

    int universe() const { return n_; }
    int cardinality() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int symbol) const {
        assert(symbol >= 1 && symbol <= n_);
        return (words_[(symbol - 1) >> 6] >> ((symbol - 1) & 63)) & 1u;
    }

    void add(int symbol) {
        check_symbol(symbol);
        std::uint64_t& w = words_[(symbol - 1) >> 6];
        const std::uint64_t bit = std::uint64_t{1} << ((symbol - 1) & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void remove(int symbol) {
        check_symbol(symbol);
        std::uint64_t& w = words_[(symbol - 1) >> 6];
        const std::uint64_t bit = std::uint64_t{1} << ((symbol - 1) & 63);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    void clear() {
        words_.assign(words_.size(), 0);
        count_ = 0;
    }

    /// Smallest member, or 0 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]) + 1);
        return 0;
    }

    /// Smallest member strictly greater than `symbol`, or 0 when none.
    int next_after(int symbol) const {
        if (symbol >= n_) return 0;
        std::size_t i = static_cast<std::size_t>(symbol) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (symbol & 63));
        if (w) return static_cast<int>(i * 64 + std::countr_zero(w) + 1);
        for (++i; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]) + 1);
        return 0;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(static_cast<int>(i * 64 + std::countr_zero(w) + 1));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count_);
        for_each([&](int s) { out.push_back(s); });
        return out;
    }

    SymbolSet& operator|=(const SymbolSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        recount();
        return *this;
    }

    SymbolSet& operator&=(const SymbolSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        recount();
        return *this;
    }

    SymbolSet& operator^=(const SymbolSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        recount();
        return *this;
    }

    /// Set difference.
    SymbolSet& operator-=(const SymbolSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        recount();
        return *this;
    }

    friend SymbolSet operator|(SymbolSet a, const SymbolSet& b) { return a |= b; }
    friend SymbolSet operator&(SymbolSet a, const SymbolSet& b) { return a &= b; }
    friend SymbolSet operator^(SymbolSet a, const SymbolSet& b) { return a ^= b; }
    friend SymbolSet operator-(SymbolSet a, const SymbolSet& b) { return a -= b; }

    SymbolSet complemented() const {
        SymbolSet out = full(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
        out.recount();
        return out;
    }

    bool intersects(const SymbolSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersect_count(const SymbolSet& o) const {
        check_universe(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const SymbolSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const SymbolSet& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
    static std::size_t word_count(int universe) {
        return static_cast<std::size_t>((universe + 63) / 64);
    }

    void check_symbol(int symbol) const {
        if (symbol < 1 || symbol > n_)
            throw ArgumentError("symbol " + std::to_string(symbol) + " outside universe 1.." +
                                std::to_string(n_));
    }

    void check_universe(const SymbolSet& o) const {
        if (n_ != o.n_) throw SizeMismatchError("SymbolSet universe mismatch");
    }

    void recount() {
        count_ = 0;
        for (std::uint64_t w : words_) count_ += std::popcount(w);
    }

    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Ascending-element-list lexicographic order ({1,3} < {2}, {1} < {1,2});
/// used wherever a deterministic least witness is reported.
bool lex_less(const SymbolSet& a, const SymbolSet& b);

}  // namespace ulam
