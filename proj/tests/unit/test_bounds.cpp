#include <doctest.h>

#include <cmath>

#include "ulam/bounds.hpp"
#include "ulam/errors.hpp"

using namespace ulam;

TEST_SUITE_BEGIN("metric-bounds");

TEST_CASE("bigcount helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(to_decimal(factorial(25)) == "15511210043330985984000000");
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(pow2(10) == 1024);
    CHECK(parse_decimal("15511210043330985984000000") == factorial(25));
    CHECK_THROWS_AS(parse_decimal("12x"), ParseError);
    CHECK_THROWS_AS(parse_decimal("-3"), ParseError);
}

TEST_CASE("falling_factorial") {
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(25, 25) == factorial(25));
    // Product accumulation cross-check.
    BigCount acc = 1;
    for (int i = 0; i < 25; ++i) acc *= (25 - i);
    CHECK(falling_factorial(25, 25) == acc);
    CHECK_THROWS_AS(falling_factorial(3, 4), ArgumentError);
}

TEST_CASE("ball_size_upper") {
    CHECK(ball_size_upper(9, 0) == 1);
    CHECK(ball_size_upper(4, 1) == 16);
    CHECK(ball_size_upper(3, 1) == 9);
}

TEST_CASE("single_deletion_bound") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(single_deletion_bound(n, 1) == 4 * n);
    CHECK(single_deletion_bound(4, 2) == 144);
    CHECK(single_deletion_bound(5, 2) == 320);
    CHECK_THROWS_AS(single_deletion_bound(5, 0), ArgumentError);
}

TEST_CASE("intersection_bound_sum term by term") {
    CHECK(intersection_bound_sum(7, 0) == 1);
    // (3,1): lam=1 gives 2*1*1*1*1*3 = 6, lam=2 gives 2*2*2*1*2*1 = 16.
    CHECK(intersection_bound_sum(3, 1) == 22);
    // (4,1): lam=1 gives 2*1*1*1*1*4 = 8, lam=2 gives 2*3*2*1*2*1 = 24.
    CHECK(intersection_bound_sum(4, 1) == 32);

    // Independent recomputation of the sum for a bigger instance.
    const unsigned n = 9, k = 3;
    BigCount expected = 0;
    for (long long lam = k; lam <= 2 * k; ++lam)
        expected += pow2(k) * binomial(n - k, lam - k) * binomial(lam, k) *
                    binomial(k, 2 * k - lam) * binomial(2 * (lam - k), lam - k) *
                    (factorial(n) / factorial(static_cast<unsigned>(n - (2 * k - lam))));
    CHECK(intersection_bound_sum(n, k) == expected);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("2").num == 2);
    CHECK(Rational::parse("2").den == 1);
    CHECK(Rational::parse("3/4").num == 3);
    CHECK(Rational::parse("3/4").den == 4);
    CHECK(Rational::parse("0.75").num == 3);
    CHECK(Rational::parse("0.75").den == 4);
    CHECK(Rational::parse("1.5").num == 3);
    CHECK(Rational::parse("1.5").den == 2);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("-1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("anticode_size_bound") {
    const Rational zero{0, 1};
    const Rational one{1, 1};
    CHECK(anticode_size_bound(9, 0, one) == 1);
    CHECK(anticode_size_bound(5, 2, zero) == 80);  // c = 0 collapses to 2^k * n!/(n-k)!

    // ceil(2^(3 + 3^(2/3))) = ceil(2^5.0801) = ceil(33.82) = 34; 34 * 120.
    CHECK(anticode_size_bound(6, 3, one) == 4080);
    const double exponent = 3.0 + std::cbrt(9.0);
    CHECK(std::ceil(std::pow(2.0, exponent)) == doctest::Approx(34.0));

    // Exact cube: k = 8 has k^(2/3) = 4, so the exponent is the integer 12.
    CHECK(anticode_size_bound(8, 8, one) == pow2(12) * factorial(8));
    // Exact cube with a fractional constant: exponent 8 + 2 = 10.
    CHECK(anticode_size_bound(8, 8, Rational{1, 2}) == pow2(10) * factorial(8));

    // Directed rounding never understates: the result dominates the float
    // evaluation for a spread of (k, c).
    for (unsigned k = 1; k <= 40; ++k) {
        const double e = k + 1.0 * std::cbrt(static_cast<double>(k) * k);
        const double approx = std::pow(2.0, e);
        const BigCount got = anticode_size_bound(40, k, one) / falling_factorial(40, k);
        CHECK(got >= BigCount(static_cast<long long>(approx * 0.9999)));
        CHECK(got <= BigCount(static_cast<long long>(approx * 1.0001) + 2));
    }
    CHECK_THROWS_AS(anticode_size_bound(3, 4, one), ArgumentError);
}

TEST_CASE("evaluation order does not change exact values") {
    // Associativity stress: same formula, operands permuted.
    const unsigned n = 12, k = 5;
    const BigCount a = intersection_bound_sum(n, k);
    BigCount b = 0;
    for (long long lam = 2 * k; lam >= k; --lam) {
        BigCount term = falling_factorial(n, static_cast<unsigned>(2 * k - lam));
        term *= binomial(2 * (lam - k), lam - k);
        term *= binomial(k, 2 * k - lam);
        term *= binomial(lam, k);
        term *= binomial(n - k, lam - k);
        term *= pow2(k);
        b += term;
    }
    CHECK(a == b);
}

TEST_SUITE_END();
