#include "ulam/bigcount.hpp"

#include <array>
#include <cctype>

#include "ulam/errors.hpp"

namespace ulam {

BigCount factorial(unsigned n) {
    BigCount r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t factorial_u64(unsigned n) {
    static constexpr std::array<std::uint64_t, 21> table = [] {
        std::array<std::uint64_t, 21> t{};
        t[0] = 1;
        for (unsigned i = 1; i <= 20; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n > 20) throw ArgumentError("factorial_u64 overflows for n > 20");
    return table[n];
}

BigCount binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

BigCount pow2(unsigned k) { return BigCount(1) << k; }

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount parse_decimal(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer string");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad integer string '" + text + "'");
    return BigCount(text);
}

}  // namespace ulam
