#include "ulam/bounds.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto parse_u64 = [](const std::string& part) -> std::uint64_t {
        if (part.empty()) throw ParseError("empty number in rational");
        for (char ch : part)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("bad rational '" + part + "'");
        return std::stoull(part);
    };
    Rational r;
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        r.num = parse_u64(s.substr(0, slash));
        r.den = parse_u64(s.substr(slash + 1));
        if (r.den == 0) throw ParseError("rational with zero denominator");
    } else if (const auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if (frac.size() > 18) throw ParseError("rational has too many decimal digits");
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        r.num = parse_u64(whole.empty() ? "0" : whole) * den + (frac.empty() ? 0 : parse_u64(frac));
        r.den = den;
    } else {
        r.num = parse_u64(s);
        r.den = 1;
    }
    if (const std::uint64_t g = std::gcd(r.num, r.den); g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

BigCount falling_factorial(unsigned n, unsigned k) {
    if (k > n)
        throw ArgumentError("falling_factorial requires k <= n (got k = " + std::to_string(k) +
                            ", n = " + std::to_string(n) + ")");
    BigCount r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (n - i);
    return r;
}

BigCount ball_size_upper(unsigned n, unsigned k) {
    if (k > n) throw ArgumentError("ball_size_upper requires k <= n");
    const BigCount c = binomial(n, k);
    return factorial(k) * c * c;
}

BigCount single_deletion_bound(unsigned n, unsigned k) {
    if (k == 0) throw ArgumentError("single_deletion_bound is undefined for k = 0");
    if (k > n) throw ArgumentError("single_deletion_bound requires k <= n");
    const BigCount c = binomial(static_cast<long long>(n) - 1, static_cast<long long>(k) - 1);
    return 4 * BigCount(n) * factorial(k - 1) * c * c;
}

BigCount intersection_bound_sum(unsigned n, unsigned k) {
    if (k > n) throw ArgumentError("intersection_bound_sum requires k <= n");
    const long long nn = n, kk = k;
    BigCount total = 0;
    for (long long lam = kk; lam <= 2 * kk; ++lam) {
        // Out-of-range binomial arguments contribute 0, so no special cases.
        BigCount term = pow2(static_cast<unsigned>(kk));
        term *= binomial(nn - kk, lam - kk);
        term *= binomial(lam, kk);
        term *= binomial(kk, 2 * kk - lam);
        term *= binomial(2 * (lam - kk), lam - kk);
        term *= falling_factorial(n, static_cast<unsigned>(2 * kk - lam));
        total += term;
    }
    return total;
}

namespace {

using boost::multiprecision::msb;
using boost::multiprecision::sqrt;

BigCount icbrt_floor(const BigCount& value) {
    if (value <= 0) return 0;
    BigCount x = BigCount(1) << (msb(value) / 3 + 2);
    while (true) {
        const BigCount next = (2 * x + value / (x * x)) / 3;
        if (next >= x) break;
        x = next;
    }
    while (x * x * x > value) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= value) ++x;
    return x;
}

BigCount sqrt_fixed(const BigCount& x, unsigned prec, bool up) {
    const BigCount scaled = x << prec;
    BigCount s = sqrt(scaled);
    if (up && s * s < scaled) ++s;
    return s;
}

BigCount mul_fixed(const BigCount& a, const BigCount& b, unsigned prec, bool up) {
    BigCount t = a * b;
    if (up) t += (BigCount(1) << prec) - 1;
    return t >> prec;
}

/// Directed bound on 2^(num/den) in fixed point (result / 2^prec), for
/// num/den in [0,1).  Digit-by-digit: 2^f is the product of 2^(2^-i) over the
/// set binary digits of f, and each 2^(2^-i) comes from repeated square roots
/// of 2, rounded in the requested direction throughout.
BigCount exp2_fraction(BigCount num, const BigCount& den, unsigned prec, bool up) {
    BigCount r = BigCount(1) << prec;
    if (num == 0) return r;
    BigCount factor = BigCount(2) << prec;  // 2.0
    for (unsigned i = 1; i <= prec + 2 && num != 0; ++i) {
        factor = sqrt_fixed(factor, prec, up);
        num <<= 1;
        if (num >= den) {
            num -= den;
            r = mul_fixed(r, factor, prec, up);
        }
    }
    // Remaining digits are a factor below the last 2^(2^-i); for an upper
    // bound they must still be absorbed.
    if (up && num != 0) r = mul_fixed(r, factor, prec, up);
    return r;
}

std::uint64_t to_u64_exponent(const BigCount& q) {
    if (q < 0 || q > 100'000'000)
        throw ArgumentError("exponent out of sane range in anticode_size_bound");
    return static_cast<std::uint64_t>(q);
}

/// ceil(2^(k + c * k^(2/3))) with outward rounding.
BigCount ceil_pow2_exponent(unsigned k, const Rational& c) {
    if (c.num == 0 || k == 0) return pow2(k);

    const double approx =
        static_cast<double>(k) +
        (static_cast<double>(c.num) / static_cast<double>(c.den)) * std::cbrt(double(k) * double(k));
    unsigned prec = 192;
    while (prec < approx + 96) prec *= 2;

    BigCount upper = 0;
    for (int attempt = 0; attempt < 3; ++attempt, prec *= 2) {
        const BigCount scaled = (BigCount(k) * k) << (3 * prec);
        const BigCount root = icbrt_floor(scaled);
        const bool exact_root = root * root * root == scaled;

        const BigCount den = BigCount(c.den) << prec;
        const BigCount e_lo = BigCount(k) * den + BigCount(c.num) * root;
        const BigCount e_up = exact_root ? e_lo : BigCount(k) * den + BigCount(c.num) * (root + 1);

        if (exact_root && e_lo % den == 0)
            return BigCount(1) << to_u64_exponent(e_lo / den);  // exponent is an exact integer

        const BigCount one = BigCount(1) << prec;
        const BigCount r_up = exp2_fraction(e_up % den, den, prec, true);
        const BigCount r_lo = exp2_fraction(e_lo % den, den, prec, false);
        upper = ((r_up << to_u64_exponent(e_up / den)) + one - 1) >> prec;
        const BigCount lower = (r_lo << to_u64_exponent(e_lo / den)) >> prec;
        // 2^e is irrational here, so it lies strictly between consecutive
        // integer bounds; when they pinch to a gap of 1 the ceiling is exact.
        if (upper - lower <= 1) return upper;
    }
    return upper;  // still a valid (outward-rounded) upper bound
}

}  // namespace

BigCount anticode_size_bound(unsigned n, unsigned k, const Rational& c) {
    if (k > n) throw ArgumentError("anticode_size_bound requires k <= n");
    return ceil_pow2_exponent(k, c) * falling_factorial(n, k);
}

}  // namespace ulam
