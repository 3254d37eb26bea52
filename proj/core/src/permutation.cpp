#include "ulam/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

void validate_one_line(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : entries) {
        if (x < 1 || x > n)
            throw ArgumentError("permutation entry " + std::to_string(x) + " outside 1.." +
                                std::to_string(n));
        if (seen[static_cast<std::size_t>(x)])
            throw ArgumentError("permutation repeats symbol " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
    validate_one_line(entries_);
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw ArgumentError("permutation size must be nonnegative");
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return unchecked(std::move(e));
}

Permutation Permutation::reversal(int n) {
    if (n < 0) throw ArgumentError("permutation size must be nonnegative");
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
    return unchecked(std::move(e));
}

Permutation Permutation::unchecked(std::vector<int> one_line) {
    Permutation p;
    p.entries_ = std::move(one_line);
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    // Trim surrounding whitespace first.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty permutation string");

    const bool separated =
        text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos ||
        text.find('\t') != std::string_view::npos;

    std::vector<int> entries;
    if (separated) {
        std::string buf(text);
        for (char& c : buf)
            if (c == ',') c = ' ';
        std::istringstream in(buf);
        std::string tok;
        while (in >> tok) {
            try {
                std::size_t pos = 0;
                const int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                entries.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad permutation entry '" + tok + "'");
            }
        }
    } else {
        for (char c : text)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad permutation string '" + std::string(text) + "'");
        if (text.size() > 9)
            throw ParseError("compact permutation strings are ambiguous for n >= 10; "
                             "use comma-separated entries");
        for (char c : text) {
            if (c == '0') throw ParseError("symbol 0 is not valid; symbols are 1-based");
            entries.push_back(c - '0');
        }
    }

    try {
        return Permutation(std::move(entries));
    } catch (const ArgumentError& e) {
        throw ParseError(e.what());
    }
}

int Permutation::at(int position) const {
    if (position < 1 || position > size())
        throw ArgumentError("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(size()));
    return entries_[static_cast<std::size_t>(position - 1)];
}

int Permutation::position_of(int symbol) const {
    if (symbol < 1 || symbol > size())
        throw ArgumentError("symbol " + std::to_string(symbol) + " outside 1.." +
                            std::to_string(size()));
    for (int i = 0; i < size(); ++i)
        if (entries_[static_cast<std::size_t>(i)] == symbol) return i + 1;
    throw ArgumentError("corrupt permutation");  // unreachable for valid objects
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    // FNV-1a over entries.
    std::size_t h = 1469598103934665603ull;
    for (int x : p.entries()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

Sequence delete_symbols(const Permutation& p, const SymbolSet& a) {
    if (a.universe() != p.size())
        throw SizeMismatchError("deletion set universe " + std::to_string(a.universe()) +
                                " does not match permutation size " + std::to_string(p.size()));
    Sequence out;
    out.reserve(static_cast<std::size_t>(p.size() - a.cardinality()));
    for (int x : p.entries())
        if (!a.contains(x)) out.push_back(x);
    return out;
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> q(static_cast<std::size_t>(n));
    const auto& e = p.entries();
    for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(e[static_cast<std::size_t>(i)] - 1)] = i + 1;
    return Permutation::unchecked(std::move(q));
}

Permutation relabel(const Permutation& s, const Permutation& p) {
    if (s.size() != p.size()) throw SizeMismatchError("relabel: size mismatch");
    const int n = p.size();
    std::vector<int> q(static_cast<std::size_t>(n));
    const auto& se = s.entries();
    const auto& pe = p.entries();
    for (int i = 0; i < n; ++i)
        q[static_cast<std::size_t>(i)] = se[static_cast<std::size_t>(pe[static_cast<std::size_t>(i)] - 1)];
    return Permutation::unchecked(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

}  // namespace ulam
