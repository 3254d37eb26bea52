#pragma once

#include <cstdint>
#include <string_view>

#include "ulam/bigcount.hpp"

namespace ulam {

/// Nonnegative rational, for the constant in anticode_size_bound.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    /// Accepts "2", "3/4", or "0.75".
    static Rational parse(std::string_view text);
};

/// n * (n-1) * ... * (n-k+1) = n!/(n-k)!; the conjectured exact value of the
/// largest diameter-k set, realized by cylinders.
BigCount falling_factorial(unsigned n, unsigned k);

/// k! * C(n,k)^2 — an upper bound on the size of a radius-k ball.
BigCount ball_size_upper(unsigned n, unsigned k);

/// 4n * (k-1)! * C(n-1,k-1)^2 — upper bound on the largest diameter-k set via
/// single-symbol deletion; defined for k >= 1 only.
BigCount single_deletion_bound(unsigned n, unsigned k);

/// Exact value of the two-ball intersection bound
///   sum over lam = k..2k of
///   2^k C(n-k,lam-k) C(lam,k) C(k,2k-lam) C(2(lam-k),lam-k) n!/(n-(2k-lam))!,
/// counting the ways to pick the union of the two deletion sets (a vertex
/// cover of the difference graph), split it, interleave the one-sided
/// symbols, and place the shared ones.
BigCount intersection_bound_sum(unsigned n, unsigned k);

/// ceil(2^(k + c*k^(2/3))) * n!/(n-k)!.  The fractional power is evaluated
/// with integer interval arithmetic and outward rounding, so the reported
/// bound is never understated.
BigCount anticode_size_bound(unsigned n, unsigned k, const Rational& c);

}  // namespace ulam
