// Microbenchmarks for the hot path: differential assembly and exact rank on
// the dim-6 truncated polynomial algebra (the largest bundled computation:
// the degree-3 differential is a 9072 x 1512 sparse rational matrix).

#include <benchmark/benchmark.h>

#include "homcoho/complex.hpp"
#include "homcoho/examples.hpp"

using namespace homcoho;

namespace {

const HomAlgebra& t6_scalar2() {
    static HomAlgebra a = examples::t6_twisted(Rational(2), Rational(0), Rational(0), Rational(2));
    return a;
}

void BM_BuildDifferential_T6_Degree3(benchmark::State& state) {
    const HomAlgebra& a = t6_scalar2();
    for (auto _ : state) {
        SparseMat d = build_total_differential(a, 3).total();
        benchmark::DoNotOptimize(d.nnz());
    }
}
BENCHMARK(BM_BuildDifferential_T6_Degree3);

void BM_Rank_T6_Degree3(benchmark::State& state) {
    const HomAlgebra& a = t6_scalar2();
    SparseMat d = build_total_differential(a, 3).total();
    for (auto _ : state) {
        long r = rank_of(d);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Rank_T6_Degree3);

void BM_CohomologyDims_T6(benchmark::State& state) {
    const HomAlgebra& a = t6_scalar2();
    for (auto _ : state) {
        std::vector<long> dims = cohomology_dims(a, 3);
        benchmark::DoNotOptimize(dims.data());
    }
}
BENCHMARK(BM_CohomologyDims_T6);

void BM_CohomologyDims_E2_Degree4(benchmark::State& state) {
    HomAlgebra a = examples::e2_algebra();
    for (auto _ : state) {
        std::vector<long> dims = cohomology_dims(a, 4);
        benchmark::DoNotOptimize(dims.data());
    }
}
BENCHMARK(BM_CohomologyDims_E2_Degree4);

void BM_Kernel_T6_Degree2(benchmark::State& state) {
    const HomAlgebra& a = t6_scalar2();
    SparseMat d = build_total_differential(a, 2).total();
    for (auto _ : state) {
        KernelResult k = rational_kernel(d);
        benchmark::DoNotOptimize(k.rank);
    }
}
BENCHMARK(BM_Kernel_T6_Degree2);

}  // namespace

BENCHMARK_MAIN();
