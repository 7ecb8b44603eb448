#include "asph/assembly.hpp"
#include "asph/meyer.hpp"
#include "asph/recipes.hpp"
#include "asph/verification.hpp"
#include "asph/wall.hpp"

#include <benchmark/benchmark.h>

using namespace asph;
using sl2z::MatrixZ;

namespace {

// Hyperbolic element whose word length grows linearly in n.
MatrixZ long_word(long n) {
    MatrixZ m;
    for (long i = 0; i < n; ++i) m = m * MatrixZ(2, 1, 1, 1) * sl2z::gen_s() * sl2z::dehn_twist().pow(i % 5 + 1);
    return m;
}

void BM_DedekindSum(benchmark::State& state) {
    Integer k = Integer(1) << static_cast<unsigned long>(state.range(0));
    k += 1;
    Integer h = k / 3 + 1;
    for (auto _ : state) benchmark::DoNotOptimize(meyer::dedekind_sum(h, k));
}
BENCHMARK(BM_DedekindSum)->Arg(10)->Arg(16)->Arg(64)->Arg(512);

void BM_MeyerFunction(benchmark::State& state) {
    MatrixZ m = long_word(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(meyer::meyer_function(m));
}
BENCHMARK(BM_MeyerFunction)->Arg(4)->Arg(16)->Arg(64);

void BM_Conjugacy(benchmark::State& state) {
    MatrixZ m = long_word(state.range(0));
    MatrixZ g = long_word(state.range(0) / 2 + 1);
    MatrixZ c = g * m * g.inverse();
    for (auto _ : state) benchmark::DoNotOptimize(sl2z::are_conjugate(m, c));
}
BENCHMARK(BM_Conjugacy)->Arg(4)->Arg(16)->Arg(64);

void BM_CommutatorDecomposition(benchmark::State& state) {
    MatrixZ m = long_word(state.range(0)).pow(12);
    for (auto _ : state) benchmark::DoNotOptimize(sl2z::commutator_decomposition(m));
}
BENCHMARK(BM_CommutatorDecomposition)->Arg(1)->Arg(2)->Arg(4);

void BM_WallCorrection(benchmark::State& state) {
    MatrixZ phi = sl2z::dehn_twist().pow(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wall::wall_correction(wall::semibundle_wall_data(phi)));
}
BENCHMARK(BM_WallCorrection)->Arg(1)->Arg(20);

void BM_RecipeXn(benchmark::State& state) {
    for (auto _ : state) {
        auto a = recipes::recipe_xn(state.range(0));
        benchmark::DoNotOptimize(assembly::compute_invariants(a));
    }
}
BENCHMARK(BM_RecipeXn)->Arg(1)->Arg(12)->Arg(100);

void BM_VerifyPaper(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verification::verify_paper());
}
BENCHMARK(BM_VerifyPaper)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
