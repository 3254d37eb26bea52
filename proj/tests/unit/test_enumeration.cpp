#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ulam/bounds.hpp"
#include "ulam/distance.hpp"
#include "ulam/enumerate.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/errors.hpp"
#include "ulam/parallel.hpp"

using namespace ulam;

namespace {

Permutation rand_perm(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::unchecked(std::move(v));
}

/// Ball size straight from the deletion-set oracle.
BigCount ball_size_oracle(int n, const Permutation& center, int radius) {
    BigCount count = 0;
    enumerate_permutations(n, [&](const Permutation& g) {
        if (ulam_distance_oracle(center, g) <= radius) ++count;
    });
    return count;
}

}  // namespace

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("ball sizes at n = 3 against the oracle") {
    const Permutation id3 = Permutation::identity(3);
    CHECK(ball_size({3, id3, 0}) == 1);
    CHECK(ball_size({3, id3, 1}) == 5);  // everything but the reversal
    CHECK(ball_size({3, id3, 2}) == 6);
    for (int r = 0; r <= 2; ++r) CHECK(ball_size({3, id3, r}) == ball_size_oracle(3, id3, r));
}

TEST_CASE("ball of radius n-1 is the whole space") {
    for (int n = 1; n <= 6; ++n)
        CHECK(ball_size({n, Permutation::identity(n), n - 1}) ==
              factorial(static_cast<unsigned>(n)));
}

TEST_CASE("ball sizes are center independent") {
    std::mt19937_64 rng(43);
    for (int n = 2; n <= 6; ++n) {
        const BigCount reference = ball_size({n, Permutation::identity(n), 2});
        for (int it = 0; it < 5; ++it)
            CHECK(ball_size({n, rand_perm(n, rng), 2}) == reference);
    }
}

TEST_CASE("ball members stream in lexicographic order and match the count") {
    std::mt19937_64 rng(47);
    const Permutation center = rand_perm(5, rng);
    std::vector<Permutation> members;
    ball_members({5, center, 2}, [&](const Permutation& p) { members.push_back(p); });
    CHECK(std::is_sorted(members.begin(), members.end()));
    CHECK(BigCount(members.size()) == ball_size({5, center, 2}));
    for (const auto& m : members) CHECK(ulam_distance(center, m) <= 2);
}

TEST_CASE("sphere sizes") {
    CHECK(sphere_sizes(2, Permutation::identity(2)) == std::vector<BigCount>{1, 1});
    CHECK(sphere_sizes(3, Permutation::identity(3)) == std::vector<BigCount>{1, 4, 1});
    std::mt19937_64 rng(53);
    for (int n = 1; n <= 7; ++n) {
        const auto sizes = sphere_sizes(n, rand_perm(n, rng));
        BigCount total = 0;
        for (const auto& s : sizes) total += s;
        CHECK(total == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("ball_intersection examples") {
    const Permutation a = Permutation::parse("123");
    CHECK(ball_intersection(a, a, 0) == 1);
    const Permutation b = Permutation::parse("213");
    CHECK(ulam_distance_oracle(a, b) == 1);
    CHECK(ball_intersection(a, b, 1) == 4);
    // Oracle recount.
    BigCount oracle = 0;
    enumerate_permutations(3, [&](const Permutation& g) {
        if (ulam_distance_oracle(a, g) <= 1 && ulam_distance_oracle(b, g) <= 1) ++oracle;
    });
    CHECK(oracle == 4);

    std::vector<Permutation> members;
    ball_intersection_members(a, b, 1, [&](const Permutation& p) { members.push_back(p); });
    CHECK(BigCount(members.size()) == 4);
    CHECK(std::is_sorted(members.begin(), members.end()));
}

TEST_CASE("intersections never exceed the closed-form bound at n <= 5") {
    std::mt19937_64 rng(59);
    for (int n = 2; n <= 5; ++n)
        for (int it = 0; it < 20; ++it) {
            const Permutation a = rand_perm(n, rng);
            const Permutation b = rand_perm(n, rng);
            const int k = ulam_distance(a, b);
            CHECK(ball_intersection(a, b, k) <=
                  intersection_bound_sum(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        }
}

TEST_CASE("transposition_pair") {
    const auto [a0, b0] = transposition_pair(5, 0);
    CHECK(a0 == b0);
    const auto [a2, b2] = transposition_pair(4, 2);
    CHECK(b2 == Permutation::parse("2143"));
    CHECK(ulam_distance_oracle(a2, b2) == 2);
    const auto [a1, b1] = transposition_pair(6, 1);
    CHECK(b1 == Permutation::parse("213456"));
    CHECK(ulam_distance_oracle(a1, b1) == 1);
    for (int n = 2; n <= 9; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const auto [a, b] = transposition_pair(n, k);
            CHECK(ulam_distance(a, b) == k);
        }
    CHECK_THROWS_AS(transposition_pair(3, 2), ArgumentError);
}

TEST_CASE("distance profile") {
    const DistanceProfile p2 = DistanceProfile::build(2);
    CHECK(p2.distance(Permutation::parse("12"), Permutation::parse("21")) == 1);
    CHECK(p2.distance(Permutation::parse("21"), Permutation::parse("21")) == 0);

    const DistanceProfile p3 = DistanceProfile::build(3);
    CHECK(p3.histogram() == sphere_sizes(3, Permutation::identity(3)));
    // Exactly one point at distance 2 from each permutation: its reversal
    // relabel.
    std::vector<Permutation> all;
    enumerate_permutations(3, [&](const Permutation& g) { all.push_back(g); });
    for (const auto& a : all) {
        int far = 0;
        for (const auto& b : all)
            if (p3.distance(a, b) == 2) ++far;
        CHECK(far == 1);
    }
    // Row prefix sums reproduce ball sizes.
    const DistanceProfile p5 = DistanceProfile::build(5);
    const auto hist = p5.histogram();
    BigCount acc = 0;
    for (int r = 0; r < 5; ++r) {
        acc += hist[static_cast<std::size_t>(r)];
        CHECK(acc == ball_size({5, Permutation::identity(5), r}));
    }
}

TEST_CASE("scan caps") {
    CHECK_THROWS_AS(ball_size({12, Permutation::identity(12), 1}), BudgetExceededError);
    CHECK_THROWS_AS(ball_size({14, Permutation::identity(14), 1}, true), BudgetExceededError);
    CHECK_THROWS_AS(DistanceProfile::build(12), BudgetExceededError);
}

TEST_CASE("chunked scans are independent of thread count") {
    const Permutation center = Permutation::identity(8);
    set_thread_count(1);
    const auto seq = sphere_sizes(8, center);
    const BigCount ball_seq = ball_size({8, center, 3});
    set_thread_count(8);
    CHECK(sphere_sizes(8, center) == seq);
    CHECK(ball_size({8, center, 3}) == ball_seq);
    set_thread_count(0);
}

TEST_SUITE_END();
