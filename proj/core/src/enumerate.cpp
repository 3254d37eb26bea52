#include "ulam/enumerate.hpp"

namespace ulam {

BigCount rank(const Permutation& p) {
    const int n = p.size();
    const auto& e = p.entries();
    BigCount r = 0;
    BigCount f = factorial(static_cast<unsigned>(n));
    for (int i = 0; i < n; ++i) {
        f /= (n - i);  // (n-1-i)! after division by the leading factor
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (e[static_cast<std::size_t>(j)] < e[static_cast<std::size_t>(i)]) ++smaller;
        r += smaller * f;
    }
    return r;
}

Permutation unrank(int n, const BigCount& r) {
    if (n < 0) throw ArgumentError("unrank: n must be nonnegative");
    const BigCount total = factorial(static_cast<unsigned>(n));
    if (r < 0 || r >= total)
        throw ArgumentError("unrank: rank " + to_decimal(r) + " outside [0, " + std::to_string(n) +
                            "!)");
    std::vector<int> avail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    BigCount rem = r;
    BigCount f = total;
    for (int i = 0; i < n; ++i) {
        f /= (n - i);
        const BigCount d = rem / f;
        rem %= f;
        const auto di = static_cast<std::size_t>(static_cast<std::uint64_t>(d));
        out.push_back(avail[di]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(di));
    }
    return Permutation::unchecked(std::move(out));
}

std::uint64_t rank_u64(const std::vector<int>& one_line) {
    const int n = static_cast<int>(one_line.size());
    detail::check_enumeration_cap(n);
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (one_line[static_cast<std::size_t>(j)] < one_line[static_cast<std::size_t>(i)])
                ++smaller;
        r += static_cast<std::uint64_t>(smaller) *
             factorial_u64(static_cast<unsigned>(n - 1 - i));
    }
    return r;
}

void unrank_u64(int n, std::uint64_t r, std::vector<int>& out) {
    detail::check_enumeration_cap(n);
    if (r >= factorial_u64(static_cast<unsigned>(n)) && n > 0)
        throw ArgumentError("unrank_u64: rank out of range");
    std::vector<int> avail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<std::size_t>(i)] = i + 1;
    out.clear();
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial_u64(static_cast<unsigned>(n - 1 - i));
        const std::size_t d = static_cast<std::size_t>(r / f);
        r %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
}

}  // namespace ulam
