#include <benchmark/benchmark.h>

#include "tropvieta/tropvieta.hpp"

using namespace tropvieta;

namespace {

const Params kTorus = Params::parse("inf,inf,inf,-2");

void BM_Classify(benchmark::State& st) {
    // Slope F_{n+1}/F_n: the longest greedy path for its height.
    Int a = 1, b = 1;
    for (long k = 0; k < st.range(0); ++k) {
        Int c = a + b;
        a = b;
        b = c;
    }
    Point3 x = u_inverse(1, UVec{Rat(a), Rat(b)});
    for (auto _ : st) benchmark::DoNotOptimize(classify(kTorus, x));
}
BENCHMARK(BM_Classify)->Arg(10)->Arg(40)->Arg(160);

void BM_GreedyPath(benchmark::State& st) {
    Point3 x = u_inverse(2, UVec{Rat(st.range(0)), Rat(1, 3)});
    for (auto _ : st) benchmark::DoNotOptimize(greedy_path(kTorus, x));
}
BENCHMARK(BM_GreedyPath)->Arg(8)->Arg(64)->Arg(512);

void BM_PartialOrbit(benchmark::State& st) {
    const Side side = st.range(1) == 0 ? Side::Boundary : Side::Skeleton;
    for (auto _ : st) benchmark::DoNotOptimize(partition_stats(st.range(0), side));
}
BENCHMARK(BM_PartialOrbit)->Args({6, 0})->Args({10, 0})->Args({6, 1})->Args({10, 1});

void BM_ReduceToNets(benchmark::State& st) {
    BPoint x(Int(st.range(0) - 1), Int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(reduce_to_nets(x));
}
BENCHMARK(BM_ReduceToNets)->Arg(100)->Arg(10000);

void BM_EnumerateZp(benchmark::State& st) {
    const Rat D(5, 1L << st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_zp_points(Int(2), D));
}
BENCHMARK(BM_EnumerateZp)->Arg(4)->Arg(6)->Arg(8);

void BM_LiftConsistency(benchmark::State& st) {
    auto t = LaurentPoly::parse("t^-1");
    SurfacePointL P = surface_from_seed({t, t, t}, LaurentPoly(), LaurentPoly(), LaurentPoly());
    std::vector<int> letters;
    for (long k = 0; k < st.range(0); ++k) letters.push_back(static_cast<int>(k % 3) + 1);
    Word w(letters);
    for (auto _ : st) benchmark::DoNotOptimize(lift_consistency(P, w));
}
BENCHMARK(BM_LiftConsistency)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
