#include "ulam/enumeration.hpp"

#include <string>

#include "ulam/distance.hpp"
#include "ulam/enumerate.hpp"
#include "ulam/errors.hpp"
#include "ulam/parallel.hpp"

namespace ulam {

namespace {

void check_scan_cap(int n, bool allow_large) {
    if (n < 0) throw ArgumentError("n must be nonnegative");
    const int cap = allow_large ? kScanCapOverride : kScanCap;
    if (n > cap)
        throw BudgetExceededError("full-space scan capped at n <= " + std::to_string(cap) +
                                  (allow_large ? "" : " (pass the large-scan override for 12..13)") +
                                  "; got n = " + std::to_string(n));
}

/// inverse as a raw lookup: inv[symbol] = 1-based position.
std::vector<int> inverse_table(const Permutation& p) {
    std::vector<int> inv(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p.at(i))] = i;
    return inv;
}

}  // namespace

BigCount ball_size(const BallSpec& spec, bool allow_large) {
    check_scan_cap(spec.n, allow_large);
    if (spec.center.size() != spec.n) throw SizeMismatchError("ball center size mismatch");
    if (spec.radius < 0) throw ArgumentError("ball radius must be nonnegative");
    const int n = spec.n;
    const int need = n - spec.radius;  // members have lis(center^-1 o g) >= need
    const std::vector<int> inv = inverse_table(spec.center);
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));

    const auto counts = chunked_scan<std::uint64_t>(total, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t count = 0;
        std::vector<int> q(static_cast<std::size_t>(n));
        std::vector<int> tails;
        for_each_permutation_range(n, lo, hi, [&](const std::vector<int>& g) {
            for (int i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
            if (lis_into(q, tails) >= need) ++count;
        });
        return count;
    });
    BigCount sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

void ball_members(const BallSpec& spec, const std::function<void(const Permutation&)>& fn,
                  bool allow_large) {
    check_scan_cap(spec.n, allow_large);
    if (spec.center.size() != spec.n) throw SizeMismatchError("ball center size mismatch");
    const int n = spec.n;
    const int need = n - spec.radius;
    const std::vector<int> inv = inverse_table(spec.center);
    std::vector<int> q(static_cast<std::size_t>(n));
    std::vector<int> tails;
    Permutation out;
    for_each_permutation(n, [&](const std::vector<int>& g) {
        for (int i = 0; i < n; ++i)
            q[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
        if (lis_into(q, tails) >= need) {
            out.assign_unchecked(g);
            fn(out);
        }
    });
}

std::vector<BigCount> sphere_sizes(int n, const Permutation& center, bool allow_large) {
    check_scan_cap(n, allow_large);
    if (center.size() != n) throw SizeMismatchError("sphere center size mismatch");
    const std::vector<int> inv = inverse_table(center);
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));
    const std::size_t radii = n == 0 ? 1 : static_cast<std::size_t>(n);

    using Histo = std::vector<std::uint64_t>;
    const auto histos = chunked_scan<Histo>(total, [&](std::uint64_t lo, std::uint64_t hi) {
        Histo h(radii, 0);
        std::vector<int> q(static_cast<std::size_t>(n));
        std::vector<int> tails;
        for_each_permutation_range(n, lo, hi, [&](const std::vector<int>& g) {
            for (int i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
            ++h[static_cast<std::size_t>(n - lis_into(q, tails))];
        });
        return h;
    });
    std::vector<BigCount> out(radii);
    for (const Histo& h : histos)
        for (std::size_t r = 0; r < radii; ++r) out[r] += h[r];
    return out;
}

BigCount ball_intersection(const Permutation& a, const Permutation& b, int k, bool allow_large) {
    if (a.size() != b.size()) throw SizeMismatchError("ball_intersection: size mismatch");
    check_scan_cap(a.size(), allow_large);
    if (k < 0) throw ArgumentError("radius must be nonnegative");
    const int n = a.size();
    const int need = n - k;
    const std::vector<int> inv_a = inverse_table(a);
    const std::vector<int> inv_b = inverse_table(b);
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));

    const auto counts = chunked_scan<std::uint64_t>(total, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t count = 0;
        std::vector<int> q(static_cast<std::size_t>(n));
        std::vector<int> tails;
        for_each_permutation_range(n, lo, hi, [&](const std::vector<int>& g) {
            for (int i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] =
                    inv_a[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
            if (lis_into(q, tails) < need) return;  // outside the first ball
            for (int i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] =
                    inv_b[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
            if (lis_into(q, tails) >= need) ++count;
        });
        return count;
    });
    BigCount sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

void ball_intersection_members(const Permutation& a, const Permutation& b, int k,
                               const std::function<void(const Permutation&)>& fn,
                               bool allow_large) {
    if (a.size() != b.size()) throw SizeMismatchError("ball_intersection: size mismatch");
    check_scan_cap(a.size(), allow_large);
    const int n = a.size();
    const int need = n - k;
    const std::vector<int> inv_a = inverse_table(a);
    const std::vector<int> inv_b = inverse_table(b);
    std::vector<int> q(static_cast<std::size_t>(n));
    std::vector<int> tails;
    Permutation out;
    for_each_permutation(n, [&](const std::vector<int>& g) {
        for (int i = 0; i < n; ++i)
            q[static_cast<std::size_t>(i)] = inv_a[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
        if (lis_into(q, tails) < need) return;
        for (int i = 0; i < n; ++i)
            q[static_cast<std::size_t>(i)] = inv_b[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
        if (lis_into(q, tails) < need) return;
        out.assign_unchecked(g);
        fn(out);
    });
}

std::pair<Permutation, Permutation> transposition_pair(int n, int k) {
    if (k < 0 || 2 * k > n)
        throw ArgumentError("transposition_pair requires 0 <= 2k <= n (got n = " +
                            std::to_string(n) + ", k = " + std::to_string(k) + ")");
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
        b[static_cast<std::size_t>(2 * i)] = 2 * i + 2;
        b[static_cast<std::size_t>(2 * i + 1)] = 2 * i + 1;
    }
    for (int i = 2 * k; i < n; ++i) b[static_cast<std::size_t>(i)] = i + 1;
    return {Permutation::identity(n), Permutation::unchecked(std::move(b))};
}

DistanceProfile DistanceProfile::build(int n, bool allow_large) {
    check_scan_cap(n, allow_large);
    DistanceProfile profile;
    profile.n_ = n;
    const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));
    profile.row_.resize(total);
    std::uint8_t* row = profile.row_.data();

    chunked_scan<int>(total, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<int> tails;
        std::uint64_t r = lo;
        for_each_permutation_range(n, lo, hi, [&](const std::vector<int>& g) {
            row[r++] = static_cast<std::uint8_t>(n - lis_into(g, tails));
        });
        return 0;
    });
    return profile;
}

int DistanceProfile::distance(const Permutation& a, const Permutation& b) const {
    if (a.size() != n_ || b.size() != n_) throw SizeMismatchError("profile: size mismatch");
    return row_[rank_u64(relabel(inverse(a), b).entries())];
}

std::vector<BigCount> DistanceProfile::histogram() const {
    const std::size_t radii = n_ == 0 ? 1 : static_cast<std::size_t>(n_);
    std::vector<std::uint64_t> h(radii, 0);
    for (std::uint8_t d : row_) ++h[d];
    return {h.begin(), h.end()};
}

}  // namespace ulam
