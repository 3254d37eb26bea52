#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ulam {

/// Arbitrary-precision nonnegative integer.  All counts and bound values use
/// this type; n! overflows every fixed width at n >= 21.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(unsigned n);

/// n! as a plain machine word; requires n <= 20.
std::uint64_t factorial_u64(unsigned n);

/// Binomial coefficient with the standard convention: 0 whenever k < 0,
/// n < 0, or k > n.
BigCount binomial(long long n, long long k);

BigCount pow2(unsigned k);

std::string to_decimal(const BigCount& value);

/// Parses a nonnegative decimal integer; rejects signs, blanks, and any
/// non-digit character.
BigCount parse_decimal(const std::string& text);

}  // namespace ulam
