#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ulam/anticode.hpp"
#include "ulam/cover.hpp"
#include "ulam/distance.hpp"
#include "ulam/enumeration.hpp"
#include "ulam/graph.hpp"

using namespace ulam;

namespace {

Permutation rand_perm(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::unchecked(std::move(v));
}

void BM_Lis(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Permutation p = rand_perm(static_cast<int>(state.range(0)), rng);
    std::vector<int> tails;
    for (auto _ : state) benchmark::DoNotOptimize(lis_into(p.entries(), tails));
}
BENCHMARK(BM_Lis)->Arg(100)->Arg(1000)->Arg(10000);

void BM_UlamDistance(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const int n = static_cast<int>(state.range(0));
    const Permutation a = rand_perm(n, rng);
    const Permutation b = rand_perm(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(ulam_distance(a, b));
}
BENCHMARK(BM_UlamDistance)->Arg(100)->Arg(1000);

void BM_DistanceOracle(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const int n = static_cast<int>(state.range(0));
    const Permutation a = rand_perm(n, rng);
    const Permutation b = rand_perm(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(ulam_distance_oracle(a, b));
}
BENCHMARK(BM_DistanceOracle)->Arg(8)->Arg(10);

void BM_BallSize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BallSpec spec{n, Permutation::identity(n), 2};
    for (auto _ : state) benchmark::DoNotOptimize(ball_size(spec));
}
BENCHMARK(BM_BallSize)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_MinVertexCover(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const int n = static_cast<int>(state.range(0));
    const UndirectedGraph g = ulam_graph(rand_perm(n, rng), rand_perm(n, rng));
    for (auto _ : state) benchmark::DoNotOptimize(min_vertex_cover(g));
}
BENCHMARK(BM_MinVertexCover)->Arg(20)->Arg(40);

void BM_CoverCensus(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const int v = static_cast<int>(state.range(0));
    UndirectedGraph g(v);
    std::bernoulli_distribution coin(0.4);
    for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b)
            if (coin(rng)) g.add_edge(a, b);
    for (auto _ : state) benchmark::DoNotOptimize(cover_census(g));
}
BENCHMARK(BM_CoverCensus)->Arg(12)->Arg(16);

void BM_MaxAnticode(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(max_anticode(n, k));
}
BENCHMARK(BM_MaxAnticode)->Args({4, 2})->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
